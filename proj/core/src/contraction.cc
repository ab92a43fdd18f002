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

#include "leafsel/contraction.h"

#include <algorithm>

#include "leafsel/errors.h"

namespace leafsel {

namespace {
constexpr std::uint32_t kNoEdge = 0xffffffffu;
}

std::uint32_t ContractedTree::edge_between(NodeId a, NodeId b) const {
  const std::size_t deg = tree.degree(a);
  for (std::size_t k = 0; k < deg; ++k) {
    const std::uint32_t e = slot_edge[a][k];
    const auto& ends = edge_ends[e];
    if ((ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a)) return e;
  }
  throw InvariantError("contracted nodes are not adjacent");
}

std::vector<NodeId> ContractedTree::path(NodeId a, NodeId b) const {
  const std::uint32_t e = edge_between(a, b);
  std::vector<NodeId> out;
  out.push_back(to_original[a]);
  const auto first = interior_nodes.begin() + static_cast<std::ptrdiff_t>(interior_offsets[e]);
  const auto last = interior_nodes.begin() + static_cast<std::ptrdiff_t>(interior_offsets[e + 1]);
  if (edge_ends[e][0] == a) {
    out.insert(out.end(), first, last);
  } else {
    out.insert(out.end(), std::make_reverse_iterator(last), std::make_reverse_iterator(first));
  }
  out.push_back(to_original[b]);
  return out;
}

ContractedTree contract(const MarkedTree& mt) {
  if (mt.marked_count() < 2) {
    throw DegenerateTree("contraction needs at least two marked leaves");
  }
  const PlaneTree& t = mt.tree();
  const std::size_t n = t.node_count();
  ContractedTree ct;
  std::size_t steps = 0;

  // Prune unmarked leaves until only marked ones remain.
  std::vector<std::uint32_t> deg(n);
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(t.degree(v));
    if (deg[v] == 1 && !mt.is_marked(v)) queue.push_back(v);
  }
  ct.spanning.assign(n, true);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    ct.spanning[v] = false;
    ++steps;
    for (NodeId w : t.rotation(v)) {
      if (!ct.spanning[w]) continue;
      if (--deg[w] == 1 && !mt.is_marked(w)) queue.push_back(w);
    }
  }

  ct.from_original.assign(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (ct.spanning[v] && deg[v] != 2) {
      ct.from_original[v] = static_cast<NodeId>(ct.to_original.size());
      ct.to_original.push_back(v);
    }
  }
  const std::size_t nu = ct.to_original.size();
  std::vector<std::vector<NodeId>> rotations(nu);
  ct.slot_edge.assign(nu, {kNoEdge, kNoEdge, kNoEdge});
  ct.interior_offsets.push_back(0);

  for (NodeId a = 0; a < nu; ++a) {
    const NodeId va = ct.to_original[a];
    for (NodeId w : t.rotation(va)) {
      if (!ct.spanning[w]) continue;
      // Follow the chain of degree-2 nodes.
      const std::size_t mark = ct.interior_nodes.size();
      NodeId prev = va;
      NodeId cur = w;
      while (ct.from_original[cur] == kNoNode) {
        ct.interior_nodes.push_back(cur);
        ++steps;
        NodeId next = kNoNode;
        for (NodeId x : t.rotation(cur)) {
          if (x != prev && ct.spanning[x]) {
            next = x;
            break;
          }
        }
        prev = cur;
        cur = next;
      }
      const NodeId b = ct.from_original[cur];
      const std::size_t slot = rotations[a].size();
      rotations[a].push_back(b);
      if (a < b) {
        const auto e = static_cast<std::uint32_t>(ct.edge_ends.size());
        ct.edge_ends.push_back({a, b});
        ct.interior_offsets.push_back(ct.interior_nodes.size());
        ct.slot_edge[a][slot] = e;
      } else {
        ct.interior_nodes.resize(mark);  // already stored from b's side
        for (std::uint32_t e : ct.slot_edge[b]) {
          if (e != kNoEdge && ct.edge_ends[e][0] == b && ct.edge_ends[e][1] == a) {
            ct.slot_edge[a][slot] = e;
            break;
          }
        }
      }
      ++steps;
    }
  }
  ct.tree = PlaneTree(rotations);
  ct.steps = steps + n;
  return ct;
}

}  // namespace leafsel
