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

#ifndef LEAFSEL_CONTRACTION_H_
#define LEAFSEL_CONTRACTION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "leafsel/marked_tree.h"
#include "leafsel/plane_tree.h"

namespace leafsel {

// The unmarked tree: the minimal subtree spanning the marked leaves with all
// degree-2 nodes smoothed away. Its leaves are exactly the marked leaves.
struct ContractedTree {
  PlaneTree tree;
  std::vector<NodeId> to_original;    // contracted id -> original id
  std::vector<NodeId> from_original;  // original id -> contracted id or kNoNode
  // Original nodes on the spanning subtree (kept by pruning).
  std::vector<bool> spanning;

  // Edge e of the contracted tree joins edge_ends[e][0] and edge_ends[e][1]
  // (contracted ids) and replaces the original path
  //   to_original[ends[0]], interior(e)..., to_original[ends[1]].
  std::vector<std::array<NodeId, 2>> edge_ends;
  std::vector<std::size_t> interior_offsets;
  std::vector<NodeId> interior_nodes;
  // Edge id for each rotation slot of each contracted node.
  std::vector<std::array<std::uint32_t, 3>> slot_edge;

  std::size_t steps = 0;

  std::size_t edge_count() const { return edge_ends.size(); }
  // Edge joining adjacent contracted nodes a and b.
  std::uint32_t edge_between(NodeId a, NodeId b) const;
  // Original path from to_original[a] to to_original[b], endpoints included.
  std::vector<NodeId> path(NodeId a, NodeId b) const;
};

// Prunes unmarked leaves until every leaf is marked, then smooths degree-2
// nodes. Requires a valid marked tree; throws DegenerateTree when m < 2.
ContractedTree contract(const MarkedTree& mt);

}  // namespace leafsel

#endif  // LEAFSEL_CONTRACTION_H_
