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

// Node classes of the contracted tree with its leaves removed, carried back
// to the original tree, and the spines they form.

#ifndef LEAFSEL_LABELING_H_
#define LEAFSEL_LABELING_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "leafsel/contraction.h"
#include "leafsel/plane_tree.h"

namespace leafsel {

// L: two contracted-tree leaves as neighbors, C: one, J: none.
enum class NodeLabel : std::uint8_t { kUnlabeled, kL, kC, kJ };

std::string_view to_string(NodeLabel label);

struct Labeling {
  // Indexed by original id.
  std::vector<NodeLabel> label;
  // Marked leaves that produced the label (two for L, one for C), padded
  // with kNoNode. Indexed by original id.
  std::vector<std::array<NodeId, 2>> labeling_leaves;
  // Marked leaf -> the L- or C-node it labels; kNoNode elsewhere.
  std::vector<NodeId> owner;

  std::size_t l_count = 0;
  std::size_t c_count = 0;
  std::size_t j_count = 0;
  std::size_t steps = 0;

  bool is_labeled(NodeId v) const { return label[v] != NodeLabel::kUnlabeled; }
};

// True when the contracted tree minus its leaves has at least two nodes,
// i.e. every internal node can be classified.
bool has_labelable_core(const ContractedTree& ct);

// Throws DegenerateTree when !has_labelable_core(ct).
Labeling classify(const ContractedTree& ct, std::size_t original_node_count);

// Side of a spine, looking along it from the anchor delimiter.
enum class SpineSide : std::uint8_t { kRight, kLeft };

// A maximal run of C-nodes. Ordered from the delimiter with the smaller
// original id (the anchor) towards the other one.
struct Spine {
  std::vector<NodeId> c_nodes;
  std::array<NodeId, 2> delimiters{kNoNode, kNoNode};
  std::vector<SpineSide> sides;
};

std::vector<Spine> find_spines(const Labeling& labeling, const ContractedTree& ct);

}  // namespace leafsel

#endif  // LEAFSEL_LABELING_H_
