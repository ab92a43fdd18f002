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

#include "support/fixtures.h"

#include <algorithm>

#include "leafsel/instance_io.h"
#include "leafsel/selector.h"

namespace leafsel::testing {

MarkedTree make_marked(const Rotations& rotations, const std::vector<NodeId>& marked,
                       const Hoods& overrides) {
  MarkedTree::NeighborhoodList list;
  for (NodeId leaf : marked) {
    const auto it = overrides.find(leaf);
    list.emplace_back(leaf, it == overrides.end() ? std::vector<NodeId>{leaf} : it->second);
  }
  return MarkedTree(PlaneTree(rotations), std::move(list));
}

Rotations DoubleStar::rotations() {
  return {{a, b, v}, {u, c, d}, {u}, {u}, {v}, {v}};
}

MarkedTree f1(const Hoods& overrides) {
  using S = DoubleStar;
  return make_marked(S::rotations(), {S::a, S::b, S::c, S::d}, overrides);
}

std::vector<NodeId> Caterpillar::all_leaves() const {
  std::vector<NodeId> out;
  for (std::size_t id = k; id < 2 * k + 2; ++id) out.push_back(static_cast<NodeId>(id));
  return out;
}

Rotations Caterpillar::rotations(const std::vector<bool>& left) const {
  Rotations rot(2 * k + 2);
  rot[path(0)] = {first_end_leaf(0), first_end_leaf(1), path(1)};
  rot[path(k - 1)] = {path(k - 2), last_end_leaf(0), last_end_leaf(1)};
  rot[first_end_leaf(0)] = rot[first_end_leaf(1)] = {path(0)};
  rot[last_end_leaf(0)] = rot[last_end_leaf(1)] = {path(k - 1)};
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const bool on_left = i < left.size() && left[i];
    if (on_left) {
      rot[path(i)] = {path(i - 1), path(i + 1), leaf_at(i)};
    } else {
      rot[path(i)] = {path(i - 1), leaf_at(i), path(i + 1)};
    }
    rot[leaf_at(i)] = {path(i)};
  }
  return rot;
}

MarkedTree f2(const std::vector<NodeId>& unmarked) {
  std::vector<NodeId> marked;
  for (NodeId leaf : kF2.all_leaves()) {
    if (std::find(unmarked.begin(), unmarked.end(), leaf) == unmarked.end()) {
      marked.push_back(leaf);
    }
  }
  return make_marked(kF2.rotations(), marked);
}

TightLComponent tight_l_component() {
  // path leaf(0) - x1(1) - x2(5) - x3(9) - x4(11) - L-node(13); x1 and x2
  // carry two-leaf subtrees on opposite sides, x3 and x4 one leaf each
  const Rotations rot = {
      {1},           // 0  leaf
      {0, 2, 5},     // 1  x1
      {1, 3, 4},     // 2  a0
      {2},           // 3
      {2},           // 4
      {1, 9, 6},     // 5  x2
      {5, 7, 8},     // 6  b0
      {6},           // 7
      {6},           // 8
      {5, 10, 11},   // 9  x3
      {9},           // 10 z
      {9, 13, 12},   // 11 x4
      {11},          // 12 w
      {11, 14, 15},  // 13 L-node
      {13},          // 14 second leaf
      {13, 16, 17},  // 15 other L-node
      {15},          // 16
      {15},          // 17
  };
  Hoods nh{{0, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}};
  return {make_marked(rot, {0, 14, 16, 17}, nh), 0, 13};
}

namespace {

NodeId hang_balanced(Rotations& rot, NodeId parent, std::size_t leaves) {
  const auto root = static_cast<NodeId>(rot.size());
  rot.emplace_back();
  if (leaves == 1) {
    rot[root] = {parent};
    return root;
  }
  const NodeId left = hang_balanced(rot, root, (leaves + 1) / 2);
  const NodeId right = hang_balanced(rot, root, leaves / 2);
  rot[root] = {parent, left, right};
  return root;
}

}  // namespace

ExhaustionCase exhaustion_case(Rational p) {
  // c = 1 is kept by making m >= r, so the L budget is 4z with z from c = 1.
  const Budget b = compute_budget(0, 1, p);
  const std::size_t h = 2 * b.z;  // 2h + 2 = 4z + 2 > 4z nodes
  const std::size_t spine = std::max<std::size_t>(7, h);
  // 0 leaf, 1 x1, 2 x2, 3 unmarked leaf at x2, 4 L-node, 5 its other leaf,
  // then spine nodes with their leaves, the far L-node and its two leaves,
  // then the hanging subtree.
  Rotations rot(6);
  rot[0] = {1};
  rot[2] = {1, 3, 4};
  rot[3] = {2};
  rot[5] = {4};
  std::vector<NodeId> marked = {0, 5};
  NodeId prev = 4;
  NodeId first_spine = kNoNode;
  for (std::size_t i = 0; i < spine; ++i) {
    const auto s = static_cast<NodeId>(rot.size());
    rot.push_back({});
    rot.push_back({s});
    marked.push_back(s + 1);
    if (i == 0) {
      first_spine = s;
    } else {
      rot[prev].push_back(s);
    }
    rot[s] = {prev, s + 1};
    prev = s;
  }
  const auto far = static_cast<NodeId>(rot.size());
  rot.push_back({prev, far + 1, far + 2});
  rot.push_back({far});
  rot.push_back({far});
  marked.push_back(far + 1);
  marked.push_back(far + 2);
  rot[prev].push_back(far);
  rot[4] = {2, 5, first_spine};
  const NodeId top = hang_balanced(rot, 1, h);
  rot[1] = {0, top, 2};

  std::vector<NodeId> hood = {0, 1, 2};
  for (NodeId v = top; v < rot.size(); ++v) hood.push_back(v);
  return {make_marked(rot, marked, {{0, hood}}), 0};
}

std::filesystem::path fixture_dir() { return LEAFSEL_FIXTURE_DIR; }

MarkedTree running_example() {
  return parse_instance(read_file(fixture_dir() / "running-example.json"));
}

}  // namespace leafsel::testing
