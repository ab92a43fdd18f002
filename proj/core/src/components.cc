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

#include "leafsel/components.h"

#include <algorithm>

#include "leafsel/errors.h"

namespace leafsel {

void assign_representative(Component& k, const LeafOrder& order) {
  if (k.kind == ComponentKind::kL) {
    NodeId first = k.marked_leaves[0];
    NodeId second = k.marked_leaves[1];
    if (order.marked_position[second] < order.marked_position[first]) std::swap(first, second);
    k.representative = first;
    k.delimiting = {k.core.front(), kNoNode};
    k.redirect = {second, kNoNode};
    return;
  }
  std::size_t right = 0;
  for (SpineSide s : k.sides) right += s == SpineSide::kRight ? 1 : 0;
  const SpineSide side = right >= 3 ? SpineSide::kRight : SpineSide::kLeft;
  std::array<std::size_t, 3> pick{};
  std::size_t found = 0;
  for (std::size_t i = 0; i < k.core.size() && found < 3; ++i) {
    if (k.sides[i] == side) pick[found++] = i;
  }
  if (found < 3) throw InvariantError("5-component without three leaves on one side");
  k.representative = k.marked_leaves[pick[1]];
  k.delimiting = {k.core[pick[0]], k.core[pick[2]]};
  k.redirect = {k.marked_leaves[pick[0]], k.marked_leaves[pick[2]]};
}

ComponentSet build_components(const MarkedTree& mt, const LeafOrder& order,
                              const Labeling& lab, const std::vector<Spine>& spines) {
  ComponentSet out;
  const std::size_t n = mt.tree().node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (lab.label[v] != NodeLabel::kL) continue;
    Component k;
    k.kind = ComponentKind::kL;
    k.core = {v};
    k.marked_leaves = {lab.labeling_leaves[v][0], lab.labeling_leaves[v][1]};
    assign_representative(k, order);
    out.components.push_back(std::move(k));
    ++out.l_count;
  }
  out.steps += n;
  for (const Spine& spine : spines) {
    const std::size_t len = spine.c_nodes.size();
    const std::size_t groups = len / 5;
    for (std::size_t g = 0; g < groups; ++g) {
      Component k;
      k.kind = ComponentKind::kFive;
      for (std::size_t i = 5 * g; i < 5 * g + 5; ++i) {
        const NodeId c = spine.c_nodes[i];
        k.core.push_back(c);
        k.marked_leaves.push_back(lab.labeling_leaves[c][0]);
        k.sides.push_back(spine.sides[i]);
      }
      assign_representative(k, order);
      out.components.push_back(std::move(k));
      ++out.five_count;
    }
    for (std::size_t i = 5 * groups; i < len; ++i) out.ungrouped.push_back(spine.c_nodes[i]);
    out.steps += len;
  }
  return out;
}

Decomposition decompose(const MarkedTree& mt) {
  Decomposition d;
  d.order = leaf_order(mt);
  d.contracted = contract(mt);
  d.labeling = classify(d.contracted, mt.tree().node_count());
  d.spines = find_spines(d.labeling, d.contracted);
  d.components = build_components(mt, d.order, d.labeling, d.spines);
  std::size_t spine_steps = 0;
  for (const auto& s : d.spines) spine_steps += s.c_nodes.size();
  d.steps = d.order.walk_steps + d.contracted.steps + d.labeling.steps + spine_steps +
            d.components.steps;
  return d;
}

MembershipIndex::MembershipIndex(const MarkedTree& mt, const Decomposition& d)
    : mt_(&mt), d_(&d) {
  const PlaneTree& t = mt.tree();
  const std::size_t n = t.node_count();
  parent_.assign(n, kNoNode);
  labeled_below_.assign(n, 0);
  NodeId root = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (d.labeling.is_labeled(v)) {
      root = v;
      break;
    }
  }
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack{root};
  parent_[root] = root;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (NodeId w : t.rotation(v)) {
      if (parent_[w] == kNoNode) {
        parent_[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    labeled_below_[v] += d.labeling.is_labeled(v) ? 1 : 0;
    if (v != root) labeled_below_[parent_[v]] += labeled_below_[v];
  }
  labeled_total_ = labeled_below_[root];
  parent_[root] = kNoNode;
}

bool MembershipIndex::label_free(NodeId from, NodeId to) const {
  if (parent_[to] == from) return labeled_below_[to] == 0;
  return labeled_total_ - labeled_below_[from] == 0;
}

std::vector<NodeId> MembershipIndex::core_path(std::size_t index) const {
  const Component& k = d_->components.components[index];
  if (k.kind == ComponentKind::kL) return {k.core.front()};
  const ContractedTree& ct = d_->contracted;
  std::vector<NodeId> out;
  for (std::size_t i = 0; i + 1 < k.core.size(); ++i) {
    auto seg = ct.path(ct.from_original[k.core[i]], ct.from_original[k.core[i + 1]]);
    if (!out.empty()) seg.erase(seg.begin());
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return out;
}

std::vector<NodeId> MembershipIndex::members(std::size_t index) const {
  const PlaneTree& t = mt_->tree();
  std::vector<NodeId> core = core_path(index);
  std::vector<NodeId> sorted_core = core;
  std::sort(sorted_core.begin(), sorted_core.end());
  const auto in_core = [&](NodeId v) {
    return std::binary_search(sorted_core.begin(), sorted_core.end(), v);
  };
  std::vector<NodeId> out = core;
  std::vector<std::pair<NodeId, NodeId>> stack;  // (node, came from)
  for (NodeId x : core) {
    for (NodeId y : t.rotation(x)) {
      if (in_core(y) || !label_free(x, y)) continue;
      stack.emplace_back(y, x);
      while (!stack.empty()) {
        const auto [v, from] = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (NodeId w : t.rotation(v)) {
          if (w != from) stack.emplace_back(w, v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace leafsel
