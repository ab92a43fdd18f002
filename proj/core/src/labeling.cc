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

#include "leafsel/labeling.h"

#include <algorithm>

#include "leafsel/errors.h"

namespace leafsel {

std::string_view to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::kUnlabeled: return "unlabeled";
    case NodeLabel::kL: return "L";
    case NodeLabel::kC: return "C";
    case NodeLabel::kJ: return "J";
  }
  return "unknown";
}

bool has_labelable_core(const ContractedTree& ct) {
  std::size_t internal = 0;
  for (NodeId a = 0; a < ct.tree.node_count(); ++a) internal += ct.tree.degree(a) > 1 ? 1 : 0;
  return internal >= 2;
}

Labeling classify(const ContractedTree& ct, std::size_t original_node_count) {
  if (!has_labelable_core(ct)) {
    throw DegenerateTree("contracted tree has fewer than two internal nodes");
  }
  const PlaneTree& tu = ct.tree;
  Labeling lab;
  lab.label.assign(original_node_count, NodeLabel::kUnlabeled);
  lab.labeling_leaves.assign(original_node_count, {kNoNode, kNoNode});
  lab.owner.assign(original_node_count, kNoNode);
  for (NodeId a = 0; a < tu.node_count(); ++a) {
    ++lab.steps;
    if (tu.degree(a) <= 1) continue;
    const NodeId orig = ct.to_original[a];
    std::size_t leaves = 0;
    for (NodeId b : tu.rotation(a)) {
      if (tu.degree(b) != 1) continue;
      const NodeId leaf = ct.to_original[b];
      if (leaves < 2) lab.labeling_leaves[orig][leaves] = leaf;
      lab.owner[leaf] = orig;
      ++leaves;
    }
    switch (leaves) {
      case 0:
        lab.label[orig] = NodeLabel::kJ;
        ++lab.j_count;
        break;
      case 1:
        lab.label[orig] = NodeLabel::kC;
        ++lab.c_count;
        break;
      case 2:
        lab.label[orig] = NodeLabel::kL;
        ++lab.l_count;
        break;
      default:
        throw InvariantError("internal node adjacent to three leaves in a non-degenerate core");
    }
  }
  return lab;
}

std::vector<Spine> find_spines(const Labeling& lab, const ContractedTree& ct) {
  const PlaneTree& tu = ct.tree;
  const auto is_c = [&](NodeId a) { return lab.label[ct.to_original[a]] == NodeLabel::kC; };
  // The two internal neighbors of a C-node, in rotation order.
  const auto inner = [&](NodeId a) {
    std::array<NodeId, 2> out{kNoNode, kNoNode};
    std::size_t k = 0;
    for (NodeId b : tu.rotation(a)) {
      if (tu.degree(b) > 1 && k < 2) out[k++] = b;
    }
    return out;
  };
  const auto leaf_of = [&](NodeId a) {
    for (NodeId b : tu.rotation(a)) {
      if (tu.degree(b) == 1) return b;
    }
    return kNoNode;
  };

  std::vector<bool> seen(tu.node_count(), false);
  std::vector<Spine> spines;
  for (NodeId start = 0; start < tu.node_count(); ++start) {
    if (seen[start] || tu.degree(start) <= 1 || !is_c(start)) continue;
    // Extend in both directions from `start`.
    std::array<std::vector<NodeId>, 2> arms;
    std::array<NodeId, 2> ends{};
    const auto nb = inner(start);
    for (int dir = 0; dir < 2; ++dir) {
      NodeId prev = start;
      NodeId cur = nb[dir];
      while (is_c(cur)) {
        arms[dir].push_back(cur);
        const auto next = inner(cur);
        const NodeId step = next[0] == prev ? next[1] : next[0];
        prev = cur;
        cur = step;
      }
      ends[dir] = cur;
    }
    // run: ends[0] ... start ... ends[1]
    std::vector<NodeId> run(arms[0].rbegin(), arms[0].rend());
    run.push_back(start);
    run.insert(run.end(), arms[1].begin(), arms[1].end());
    if (ct.to_original[ends[1]] < ct.to_original[ends[0]]) {
      std::reverse(run.begin(), run.end());
      std::swap(ends[0], ends[1]);
    }
    Spine spine;
    spine.delimiters = {ct.to_original[ends[0]], ct.to_original[ends[1]]};
    spine.c_nodes.reserve(run.size());
    spine.sides.reserve(run.size());
    NodeId prev = ends[0];
    for (NodeId a : run) {
      seen[a] = true;
      spine.c_nodes.push_back(ct.to_original[a]);
      spine.sides.push_back(tu.successor(a, prev) == leaf_of(a) ? SpineSide::kRight
                                                                 : SpineSide::kLeft);
      prev = a;
    }
    spines.push_back(std::move(spine));
  }
  return spines;
}

}  // namespace leafsel
