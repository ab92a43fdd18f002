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

// Intervals of unmarked leaves between cyclically consecutive marked leaves.
// Analysis support only; the selector never builds these.

#ifndef LEAFSEL_INTERVALS_H_
#define LEAFSEL_INTERVALS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "leafsel/leaf_order.h"
#include "leafsel/marked_tree.h"

namespace leafsel {

struct IntervalPartition {
  // intervals[i]: unmarked leaves strictly between marked_order[i] and
  // marked_order[(i + 1) % m], in order.
  std::vector<std::vector<NodeId>> intervals;

  std::size_t max_size() const;
};

IntervalPartition interval_partition(const MarkedTree& mt, const LeafOrder& order);

// Node set (sorted) of the minimal subtree containing the two bounding marked
// leaves of interval i and its unmarked leaves.
std::vector<NodeId> interval_tree(const MarkedTree& mt, const LeafOrder& order,
                                  const IntervalPartition& partition, std::size_t i);

// Longest run of cyclically consecutive leaves in `order` that are all
// unmarked members of the given (sorted) node set.
std::size_t delta_k(const MarkedTree& mt, const LeafOrder& order,
                    std::span<const NodeId> sorted_members);

}  // namespace leafsel

#endif  // LEAFSEL_INTERVALS_H_
