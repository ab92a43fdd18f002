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

#include "leafsel/validate.h"

#include <algorithm>
#include <sstream>

#include "leafsel/leaf_order.h"

namespace leafsel {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

void check_tree(const PlaneTree& tree, ValidationReport& report) {
  auto add = [&](ViolationKind kind, NodeId node, NodeId other, std::string msg) {
    report.violations.push_back({kind, node, other, kNoNode, std::move(msg)});
  };
  const std::size_t n = tree.node_count();
  if (n == 0) {
    add(ViolationKind::kEmptyTree, kNoNode, kNoNode, "tree has no nodes");
    return;
  }
  std::size_t degree_sum = 0;
  bool self_loop = false;
  for (NodeId v = 0; v < n; ++v) {
    const auto rot = tree.rotation(v);
    degree_sum += rot.size();
    if (rot.size() != 1 && rot.size() != 3) {
      add(ViolationKind::kBadDegree, v, kNoNode,
          "node " + node_str(v) + " has degree " + std::to_string(rot.size()));
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const NodeId w = rot[i];
      if (w == v) {
        self_loop = true;
        add(ViolationKind::kNotATree, v, v, "node " + node_str(v) + " is its own neighbor");
        continue;
      }
      if (std::find(rot.begin() + i + 1, rot.end(), w) != rot.end()) {
        add(ViolationKind::kDuplicateNeighbor, v, w,
            "node " + node_str(v) + " lists neighbor " + node_str(w) + " twice");
      }
      if (tree.index_of(w, v) == tree.degree(w)) {
        add(ViolationKind::kAsymmetricAdjacency, v, w,
            "node " + node_str(v) + " lists " + node_str(w) + " but not vice versa");
      }
    }
  }
  if (self_loop) return;
  // Connected with n - 1 edges <=> tree (given symmetric adjacency).
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : tree.rotation(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    add(ViolationKind::kNotATree, kNoNode, kNoNode,
        "tree is disconnected: " + std::to_string(reached) + " of " + std::to_string(n) +
            " nodes reachable from 0");
  } else if (degree_sum != 2 * (n - 1)) {
    add(ViolationKind::kNotATree, kNoNode, kNoNode, "graph has a cycle");
  }
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyTree: return "empty-tree";
    case ViolationKind::kBadDegree: return "bad-degree";
    case ViolationKind::kDuplicateNeighbor: return "duplicate-neighbor";
    case ViolationKind::kAsymmetricAdjacency: return "asymmetric-adjacency";
    case ViolationKind::kNotATree: return "not-a-tree";
    case ViolationKind::kNoMarkedLeaves: return "no-marked-leaves";
    case ViolationKind::kMarkedNotLeaf: return "marked-not-leaf";
    case ViolationKind::kLeafNotInNeighborhood: return "leaf-not-in-neighborhood";
    case ViolationKind::kDisconnectedNeighborhood: return "disconnected-neighborhood";
    case ViolationKind::kImproperNeighborhood: return "improper-neighborhood";
    case ViolationKind::kConsecutiveOverlap: return "consecutive-overlap";
  }
  return "unknown";
}

bool ValidationReport::contains(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << leafsel::to_string(v.kind) << ": " << v.message << '\n';
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid marked tree:\n" + report.to_string()),
      report_(std::move(report)) {}

ValidationReport validate(const PlaneTree& tree) {
  ValidationReport report;
  check_tree(tree, report);
  return report;
}

ValidationReport validate(const MarkedTree& mt) {
  ValidationReport report = validate(mt.tree());
  const bool tree_ok = report.ok();
  auto add = [&](ViolationKind kind, NodeId node, NodeId other, NodeId witness, std::string msg) {
    report.violations.push_back({kind, node, other, witness, std::move(msg)});
  };
  const PlaneTree& tree = mt.tree();
  const std::size_t n = tree.node_count();

  if (mt.marked_count() == 0) {
    add(ViolationKind::kNoMarkedLeaves, kNoNode, kNoNode, kNoNode, "no marked leaves");
  }
  bool marked_ok = true;
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<NodeId> stack;
  for (std::size_t i = 0; i < mt.marked_count(); ++i) {
    const NodeId leaf = mt.marked()[i];
    if (!tree.is_leaf(leaf)) {
      marked_ok = false;
      add(ViolationKind::kMarkedNotLeaf, leaf, kNoNode, kNoNode,
          "marked node " + node_str(leaf) + " is not a leaf");
    }
    const auto nh = mt.neighborhood_at(i);
    if (!std::binary_search(nh.begin(), nh.end(), leaf)) {
      add(ViolationKind::kLeafNotInNeighborhood, leaf, kNoNode, kNoNode,
          "neighborhood of " + node_str(leaf) + " does not contain it");
    }
    if (nh.empty()) continue;
    const std::uint32_t tag = static_cast<std::uint32_t>(i) + 1;
    for (NodeId v : nh) stamp[v] = tag;

    bool proper = true;
    for (NodeId v : nh) {
      std::size_t inside = 0;
      for (NodeId w : tree.rotation(v)) inside += stamp[w] == tag ? 1 : 0;
      if (inside == 2 && proper) {
        proper = false;
        add(ViolationKind::kImproperNeighborhood, leaf, kNoNode, v,
            "neighborhood of " + node_str(leaf) + " is not proper: node " + node_str(v) +
                " has two neighbors inside it");
      }
    }
    // Flood from the first node; a second tag marks reached nodes.
    const std::uint32_t reached_tag = tag | 0x80000000u;
    stack.assign(1, nh.front());
    stamp[nh.front()] = reached_tag;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : tree.rotation(v)) {
        if (stamp[w] == tag) {
          stamp[w] = reached_tag;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != nh.size()) {
      add(ViolationKind::kDisconnectedNeighborhood, leaf, kNoNode, kNoNode,
          "neighborhood of " + node_str(leaf) + " is disconnected");
    }
  }

  if (!tree_ok || !marked_ok || mt.marked_count() < 2) return report;

  const LeafOrder order = leaf_order(mt);
  const std::size_t m = order.marked_order.size();
  const std::size_t pairs = m == 2 ? 1 : m;
  for (std::size_t i = 0; i < pairs; ++i) {
    const NodeId a = order.marked_order[i];
    const NodeId b = order.marked_order[(i + 1) % m];
    const auto na = mt.neighborhood(a);
    const auto nb = mt.neighborhood(b);
    auto ia = na.begin();
    auto ib = nb.begin();
    while (ia != na.end() && ib != nb.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        add(ViolationKind::kConsecutiveOverlap, a, b, *ia,
            "consecutive marked leaves " + node_str(a) + " and " + node_str(b) +
                " share node " + node_str(*ia));
        break;
      }
    }
  }
  return report;
}

}  // namespace leafsel
