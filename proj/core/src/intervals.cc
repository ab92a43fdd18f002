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

#include "leafsel/intervals.h"

#include <algorithm>

namespace leafsel {

std::size_t IntervalPartition::max_size() const {
  std::size_t best = 0;
  for (const auto& iv : intervals) best = std::max(best, iv.size());
  return best;
}

IntervalPartition interval_partition(const MarkedTree& mt, const LeafOrder& order) {
  IntervalPartition out;
  const std::size_t m = order.marked_order.size();
  const std::size_t total = order.order.size();
  out.intervals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t from = order.position[order.marked_order[i]];
    for (std::size_t k = 1; k < total; ++k) {
      const NodeId leaf = order.order[(from + k) % total];
      if (mt.is_marked(leaf)) break;
      out.intervals[i].push_back(leaf);
    }
  }
  return out;
}

std::vector<NodeId> interval_tree(const MarkedTree& mt, const LeafOrder& order,
                                  const IntervalPartition& partition, std::size_t i) {
  const PlaneTree& t = mt.tree();
  const std::size_t n = t.node_count();
  const std::size_t m = order.marked_order.size();
  std::vector<bool> keep_leaf(n, false);
  keep_leaf[order.marked_order[i]] = true;
  keep_leaf[order.marked_order[(i + 1) % m]] = true;
  for (NodeId leaf : partition.intervals[i]) keep_leaf[leaf] = true;

  std::vector<std::uint32_t> deg(n);
  std::vector<bool> alive(n, true);
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(t.degree(v));
    if (deg[v] <= 1 && !keep_leaf[v]) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    alive[v] = false;
    for (NodeId w : t.rotation(v)) {
      if (alive[w] && --deg[w] == 1 && !keep_leaf[w]) queue.push_back(w);
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

std::size_t delta_k(const MarkedTree& mt, const LeafOrder& order,
                    std::span<const NodeId> sorted_members) {
  const std::size_t total = order.order.size();
  const auto counts = [&](NodeId leaf) {
    return !mt.is_marked(leaf) &&
           std::binary_search(sorted_members.begin(), sorted_members.end(), leaf);
  };
  std::size_t start = total;
  for (std::size_t j = 0; j < total; ++j) {
    if (!counts(order.order[j])) {
      start = j;
      break;
    }
  }
  if (start == total) return total;
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t k = 1; k <= total; ++k) {
    if (counts(order.order[(start + k) % total])) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

}  // namespace leafsel
