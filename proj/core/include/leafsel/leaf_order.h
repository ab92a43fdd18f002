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

#ifndef LEAFSEL_LEAF_ORDER_H_
#define LEAFSEL_LEAF_ORDER_H_

#include <cstddef>
#include <vector>

#include "leafsel/marked_tree.h"
#include "leafsel/plane_tree.h"

namespace leafsel {

// Cyclic counterclockwise order of the leaves. Only cyclic adjacency is
// meaningful; the sequence starts at the lowest-id leaf.
struct LeafOrder {
  std::vector<NodeId> order;
  // `order` filtered to marked leaves (empty for a bare PlaneTree).
  std::vector<NodeId> marked_order;
  // Node -> index in `order` / `marked_order`, kNoNode where not applicable.
  std::vector<NodeId> position;
  std::vector<NodeId> marked_position;
  // Number of edge traversals made by the face walk.
  std::size_t walk_steps = 0;

  std::size_t marked_count() const { return marked_order.size(); }
  // Cyclic neighbors in marked_order.
  NodeId next_marked(NodeId leaf) const;
  NodeId prev_marked(NodeId leaf) const;
};

// Face walk: start at the lowest-id leaf; on arriving at v from x, leave
// through the counterclockwise successor of x in v's rotation. Requires a
// valid tree with at least two nodes.
LeafOrder leaf_order(const PlaneTree& tree);
LeafOrder leaf_order(const MarkedTree& mt);

}  // namespace leafsel

#endif  // LEAFSEL_LEAF_ORDER_H_
