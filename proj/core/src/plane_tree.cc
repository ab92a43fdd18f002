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

#include "leafsel/plane_tree.h"

#include <algorithm>
#include <string>

#include "leafsel/errors.h"

namespace leafsel {

PlaneTree::PlaneTree(const std::vector<std::vector<NodeId>>& rotations) {
  const std::size_t n = rotations.size();
  if (n >= kNoNode) throw InvalidInput("too many nodes");
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  std::size_t total = 0;
  for (const auto& rot : rotations) total += rot.size();
  neighbors_.reserve(total);
  for (std::size_t v = 0; v < n; ++v) {
    for (NodeId w : rotations[v]) {
      if (w >= n) {
        throw InvalidInput("node " + std::to_string(v) + " has neighbor " + std::to_string(w) +
                           " outside [0, " + std::to_string(n) + ")");
      }
      neighbors_.push_back(w);
    }
    offsets_.push_back(neighbors_.size());
  }
}

std::size_t PlaneTree::index_of(NodeId v, NodeId w) const {
  const auto rot = rotation(v);
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] == w) return i;
  }
  return rot.size();
}

NodeId PlaneTree::successor(NodeId v, NodeId from) const {
  const auto rot = rotation(v);
  const std::size_t i = index_of(v, from);
  return rot[(i + 1) % rot.size()];
}

std::vector<NodeId> PlaneTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::size_t PlaneTree::leaf_count() const {
  std::size_t count = 0;
  for (NodeId v = 0; v < node_count(); ++v) count += is_leaf(v) ? 1 : 0;
  return count;
}

std::vector<std::vector<NodeId>> PlaneTree::to_rotations() const {
  std::vector<std::vector<NodeId>> out(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    const auto rot = rotation(v);
    out[v].assign(rot.begin(), rot.end());
  }
  return out;
}

}  // namespace leafsel
