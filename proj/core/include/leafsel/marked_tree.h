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

#ifndef LEAFSEL_MARKED_TREE_H_
#define LEAFSEL_MARKED_TREE_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "leafsel/plane_tree.h"

namespace leafsel {

// A plane tree with a set of marked nodes, each carrying a neighborhood
// (a node set of the tree). Neighborhoods are stored sorted and deduplicated.
// Like PlaneTree, construction only rejects ids that are out of range; the
// marked-tree properties are checked by validate().
class MarkedTree {
 public:
  using NeighborhoodList = std::vector<std::pair<NodeId, std::vector<NodeId>>>;

  MarkedTree() = default;

  // One entry per marked node. Throws InvalidInput on out-of-range ids or a
  // node marked twice.
  MarkedTree(PlaneTree tree, NeighborhoodList neighborhoods);

  const PlaneTree& tree() const { return tree_; }

  // Marked nodes in ascending id order.
  std::span<const NodeId> marked() const { return marked_; }
  std::size_t marked_count() const { return marked_.size(); }
  // r = number of unmarked leaves.
  std::size_t unmarked_leaf_count() const;

  bool is_marked(NodeId v) const { return slot_[v] != kNoNode; }
  // Index of v in marked(), or kNoNode.
  NodeId slot(NodeId v) const { return slot_[v]; }

  std::span<const NodeId> neighborhood(NodeId leaf) const {
    return neighborhood_at(slot_[leaf]);
  }
  std::span<const NodeId> neighborhood_at(std::size_t slot) const {
    return {nh_nodes_.data() + nh_offsets_[slot], nh_offsets_[slot + 1] - nh_offsets_[slot]};
  }
  bool in_neighborhood(NodeId leaf, NodeId v) const {
    auto nh = neighborhood(leaf);
    return std::binary_search(nh.begin(), nh.end(), v);
  }

  NeighborhoodList neighborhood_list() const;

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;

 private:
  PlaneTree tree_;
  std::vector<NodeId> marked_;
  std::vector<NodeId> slot_;
  std::vector<std::size_t> nh_offsets_;
  std::vector<NodeId> nh_nodes_;
};

}  // namespace leafsel

#endif  // LEAFSEL_MARKED_TREE_H_
