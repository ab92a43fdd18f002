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

#include "leafsel/marked_tree.h"

#include <algorithm>
#include <string>

#include "leafsel/errors.h"

namespace leafsel {

MarkedTree::MarkedTree(PlaneTree tree, NeighborhoodList neighborhoods) : tree_(std::move(tree)) {
  const std::size_t n = tree_.node_count();
  slot_.assign(n, kNoNode);
  std::sort(neighborhoods.begin(), neighborhoods.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  marked_.reserve(neighborhoods.size());
  nh_offsets_.reserve(neighborhoods.size() + 1);
  nh_offsets_.push_back(0);
  for (auto& [leaf, nodes] : neighborhoods) {
    if (leaf >= n) throw InvalidInput("marked node " + std::to_string(leaf) + " out of range");
    if (slot_[leaf] != kNoNode) throw InvalidInput("node " + std::to_string(leaf) + " marked twice");
    slot_[leaf] = static_cast<NodeId>(marked_.size());
    marked_.push_back(leaf);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (NodeId v : nodes) {
      if (v >= n) {
        throw InvalidInput("neighborhood of " + std::to_string(leaf) + " lists node " +
                           std::to_string(v) + " out of range");
      }
    }
    nh_nodes_.insert(nh_nodes_.end(), nodes.begin(), nodes.end());
    nh_offsets_.push_back(nh_nodes_.size());
  }
}

std::size_t MarkedTree::unmarked_leaf_count() const {
  std::size_t leaves = tree_.leaf_count();
  std::size_t marked_leaves = 0;
  for (NodeId v : marked_) marked_leaves += tree_.is_leaf(v) ? 1 : 0;
  return leaves - marked_leaves;
}

MarkedTree::NeighborhoodList MarkedTree::neighborhood_list() const {
  NeighborhoodList out;
  out.reserve(marked_.size());
  for (std::size_t i = 0; i < marked_.size(); ++i) {
    const auto nh = neighborhood_at(i);
    out.emplace_back(marked_[i], std::vector<NodeId>(nh.begin(), nh.end()));
  }
  return out;
}

}  // namespace leafsel
