// Copyright 2026 The leafsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A tree embedded in the plane, encoded by its rotation system: every node
// stores its neighbors in counterclockwise order.

#ifndef LEAFSEL_PLANE_TREE_H_
#define LEAFSEL_PLANE_TREE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace leafsel {

// Dense node index in [0, node_count()).
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Immutable rotation system. The constructor only checks that neighbor ids
// are in range; structural properties (degrees, symmetry, acyclicity) are the
// business of validate().
class PlaneTree {
 public:
  PlaneTree() = default;

  // rotations[v] lists the neighbors of v in counterclockwise order.
  // Throws InvalidInput if a neighbor id is out of range.
  explicit PlaneTree(const std::vector<std::vector<NodeId>>& rotations);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> rotation(NodeId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(NodeId v) const { return degree(v) == 1; }

  // Position of w in v's rotation, or degree(v) if w is not a neighbor.
  std::size_t index_of(NodeId v, NodeId w) const;

  // The neighbor following `from` in v's counterclockwise rotation.
  // `from` must be a neighbor of v.
  NodeId successor(NodeId v, NodeId from) const;

  // All degree-1 nodes in ascending id order.
  std::vector<NodeId> leaves() const;
  std::size_t leaf_count() const;

  std::vector<std::vector<NodeId>> to_rotations() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

}  // namespace leafsel

#endif  // LEAFSEL_PLANE_TREE_H_
