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

#include "leafsel/leaf_order.h"

#include "leafsel/errors.h"

namespace leafsel {

NodeId LeafOrder::next_marked(NodeId leaf) const {
  const std::size_t i = marked_position[leaf];
  return marked_order[(i + 1) % marked_order.size()];
}

NodeId LeafOrder::prev_marked(NodeId leaf) const {
  const std::size_t i = marked_position[leaf];
  return marked_order[(i + marked_order.size() - 1) % marked_order.size()];
}

LeafOrder leaf_order(const PlaneTree& tree) {
  LeafOrder out;
  const std::size_t n = tree.node_count();
  out.position.assign(n, kNoNode);
  NodeId start = kNoNode;
  for (NodeId v = 0; v < n; ++v) {
    if (tree.is_leaf(v)) {
      start = v;
      break;
    }
  }
  if (start == kNoNode) return out;

  out.order.push_back(start);
  out.position[start] = 0;
  NodeId from = start;
  NodeId at = tree.rotation(start)[0];
  std::size_t steps = 1;
  // An Euler tour crosses every edge twice.
  const std::size_t limit = 2 * tree.edge_count() + 2;
  while (at != start) {
    NodeId next;
    if (tree.is_leaf(at)) {
      if (out.position[at] != kNoNode) throw InvariantError("face walk revisits a leaf");
      out.position[at] = static_cast<NodeId>(out.order.size());
      out.order.push_back(at);
      next = from;
    } else {
      next = tree.successor(at, from);
    }
    from = at;
    at = next;
    if (++steps > limit) throw InvariantError("face walk does not close; tree is malformed");
  }
  out.walk_steps = steps;
  return out;
}

LeafOrder leaf_order(const MarkedTree& mt) {
  LeafOrder out = leaf_order(mt.tree());
  out.marked_position.assign(mt.tree().node_count(), kNoNode);
  out.marked_order.reserve(mt.marked_count());
  for (NodeId leaf : out.order) {
    if (mt.is_marked(leaf)) {
      out.marked_position[leaf] = static_cast<NodeId>(out.marked_order.size());
      out.marked_order.push_back(leaf);
    }
  }
  return out;
}

}  // namespace leafsel
