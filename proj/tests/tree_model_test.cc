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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "leafsel/errors.h"
#include "leafsel/generator.h"
#include "leafsel/leaf_order.h"
#include "leafsel/validate.h"
#include "support/brute.h"
#include "support/fixtures.h"

namespace leafsel {
namespace {

using testing::DoubleStar;
using testing::kF2;

TEST(PlaneTreeTest, AccessorsOnDoubleStar) {
  const PlaneTree t(DoubleStar::rotations());
  EXPECT_EQ(t.node_count(), 6u);
  EXPECT_EQ(t.edge_count(), 5u);
  EXPECT_EQ(t.degree(DoubleStar::u), 3u);
  EXPECT_TRUE(t.is_leaf(DoubleStar::a));
  EXPECT_EQ(t.leaves(), (std::vector<NodeId>{2, 3, 4, 5}));
  EXPECT_EQ(t.leaf_count(), 4u);
  EXPECT_EQ(t.successor(DoubleStar::u, DoubleStar::a), DoubleStar::b);
  EXPECT_EQ(t.successor(DoubleStar::u, DoubleStar::v), DoubleStar::a);
  EXPECT_EQ(t.index_of(DoubleStar::v, DoubleStar::d), 2u);
  EXPECT_EQ(t.index_of(DoubleStar::v, DoubleStar::a), 3u);
  EXPECT_EQ(t.to_rotations(), DoubleStar::rotations());
}

TEST(PlaneTreeTest, RejectsOutOfRangeNeighbor) {
  EXPECT_THROW(PlaneTree({{1}, {5}}), InvalidInput);
}

TEST(MarkedTreeTest, NeighborhoodsAreSortedAndDeduplicated) {
  const MarkedTree mt = testing::f1({{DoubleStar::a, {DoubleStar::u, DoubleStar::a, DoubleStar::u}}});
  const auto nh = mt.neighborhood(DoubleStar::a);
  EXPECT_EQ(std::vector<NodeId>(nh.begin(), nh.end()), (std::vector<NodeId>{0, 2}));
  EXPECT_TRUE(mt.in_neighborhood(DoubleStar::a, DoubleStar::u));
  EXPECT_FALSE(mt.in_neighborhood(DoubleStar::b, DoubleStar::u));
  EXPECT_EQ(mt.marked_count(), 4u);
  EXPECT_EQ(mt.unmarked_leaf_count(), 0u);
  EXPECT_EQ(mt.slot(DoubleStar::c), 2u);
  EXPECT_EQ(mt.slot(DoubleStar::u), kNoNode);
}

TEST(MarkedTreeTest, RejectsDoubleMarkAndBadIds) {
  const PlaneTree t(DoubleStar::rotations());
  EXPECT_THROW(MarkedTree(t, {{2, {2}}, {2, {2}}}), InvalidInput);
  EXPECT_THROW(MarkedTree(t, {{9, {9}}}), InvalidInput);
  EXPECT_THROW(MarkedTree(t, {{2, {2, 17}}}), InvalidInput);
}

TEST(ValidateTest, DoubleStarIsValid) {
  const auto report = validate(testing::f1());
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(ValidateTest, SharedNodeBetweenConsecutiveLeaves) {
  const MarkedTree mt = testing::f1(
      {{DoubleStar::a, {DoubleStar::a, DoubleStar::u}}, {DoubleStar::b, {DoubleStar::b, DoubleStar::u}}});
  const auto report = validate(mt);
  ASSERT_TRUE(report.contains(ViolationKind::kConsecutiveOverlap));
  const auto it = std::find_if(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::kConsecutiveOverlap;
  });
  EXPECT_EQ(std::minmax(it->node, it->other), std::minmax(DoubleStar::a, DoubleStar::b));
  EXPECT_EQ(it->witness, DoubleStar::u);
}

TEST(ValidateTest, CaterpillarIsValid) {
  const auto report = validate(testing::f2());
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(ValidateTest, WraparoundPairCounts) {
  // order is (a, b, c, d); d and a are consecutive through the wrap
  const MarkedTree mt = testing::f1({{DoubleStar::a, {DoubleStar::a, DoubleStar::u}},
                                     {DoubleStar::d, {DoubleStar::d, DoubleStar::v, DoubleStar::u,
                                                      DoubleStar::c, DoubleStar::b, DoubleStar::a}}});
  const auto report = validate(mt);
  EXPECT_TRUE(report.contains(ViolationKind::kConsecutiveOverlap));
}

TEST(ValidateTest, NonConsecutiveOverlapIsAllowed) {
  // leaves at v3 and v5 are separated by the leaf at v4; their
  // neighborhoods share v4 itself
  const NodeId l3 = kF2.leaf_at(2), l5 = kF2.leaf_at(4);
  const MarkedTree mt = testing::make_marked(
      kF2.rotations(), kF2.all_leaves(),
      {{l3, {l3, kF2.path(1), kF2.path(2), kF2.path(3)}},
       {l5, {l5, kF2.path(3), kF2.path(4), kF2.path(5)}}});
  const auto report = validate(mt);
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(ValidateTest, StructuralViolations) {
  // degree 2 node: path of three nodes
  EXPECT_TRUE(validate(PlaneTree({{1}, {0, 2}, {1}})).contains(ViolationKind::kBadDegree));
  // asymmetric: 0 lists 1 but 1 does not list 0
  EXPECT_TRUE(validate(PlaneTree({{1}, {2}, {1}})).contains(ViolationKind::kAsymmetricAdjacency));
  // duplicate neighbor
  EXPECT_TRUE(validate(PlaneTree({{1, 1, 2}, {0, 0}, {0}})).contains(ViolationKind::kDuplicateNeighbor));
  // two disjoint edges
  EXPECT_TRUE(validate(PlaneTree({{1}, {0}, {3}, {2}})).contains(ViolationKind::kNotATree));
  EXPECT_TRUE(validate(PlaneTree()).contains(ViolationKind::kEmptyTree));
}

TEST(ValidateTest, NeighborhoodViolations) {
  using S = DoubleStar;
  EXPECT_TRUE(validate(MarkedTree(PlaneTree(S::rotations()), {})).contains(ViolationKind::kNoMarkedLeaves));
  EXPECT_TRUE(validate(MarkedTree(PlaneTree(S::rotations()), {{S::u, {S::u}}}))
                  .contains(ViolationKind::kMarkedNotLeaf));
  EXPECT_TRUE(validate(testing::f1({{S::a, {S::u}}})).contains(ViolationKind::kLeafNotInNeighborhood));
  EXPECT_TRUE(validate(testing::f1({{S::a, {S::a, S::c}}})).contains(ViolationKind::kDisconnectedNeighborhood));
  // {a, u, v}: u has two nh-neighbors
  EXPECT_TRUE(validate(testing::f1({{S::a, {S::a, S::u, S::v}}})).contains(ViolationKind::kImproperNeighborhood));
}

TEST(ValidateTest, ProperNeighborhoodAccepted) {
  using S = DoubleStar;
  // u with all three neighbors: a, b, v inside -> u has 3, others 1.
  // b and d then overlap with their singletons, so use only a marked pair.
  const MarkedTree mt(PlaneTree(S::rotations()), {{S::a, {S::a, S::u, S::b, S::v}}, {S::d, {S::d}}});
  const auto report = validate(mt);
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(LeafOrderTest, DoubleStar) {
  const LeafOrder order = leaf_order(PlaneTree(DoubleStar::rotations()));
  EXPECT_EQ(order.order, (std::vector<NodeId>{2, 3, 4, 5}));
  EXPECT_TRUE(order.marked_order.empty());
  const LeafOrder marked = leaf_order(testing::f1());
  EXPECT_EQ(marked.marked_order, (std::vector<NodeId>{2, 3, 4, 5}));
  EXPECT_EQ(marked.next_marked(5), 2u);
  EXPECT_EQ(marked.prev_marked(2), 5u);
}

TEST(LeafOrderTest, SingleEdge) {
  const LeafOrder order = leaf_order(PlaneTree({{1}, {0}}));
  EXPECT_EQ(order.order, (std::vector<NodeId>{0, 1}));
}

TEST(LeafOrderTest, CaterpillarSideIsContiguous) {
  const LeafOrder order = leaf_order(PlaneTree(kF2.rotations()));
  // inner leaves all on one side -> they form a run bounded by end leaves
  std::vector<NodeId> inner;
  for (std::size_t i = 1; i + 1 < kF2.k; ++i) inner.push_back(kF2.leaf_at(i));
  const auto& o = order.order;
  const std::size_t n = o.size();
  const std::size_t at = order.position[inner.front()];
  for (std::size_t j = 0; j < inner.size(); ++j) EXPECT_EQ(o[(at + j) % n], inner[j]);
  const NodeId before = o[(at + n - 1) % n];
  const NodeId after = o[(at + inner.size()) % n];
  EXPECT_TRUE(before == kF2.first_end_leaf(0) || before == kF2.first_end_leaf(1));
  EXPECT_TRUE(after == kF2.last_end_leaf(0) || after == kF2.last_end_leaf(1));
}

TEST(LeafOrderTest, MatchesRecursiveWalkOnRandomTrees) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenConfig cfg;
    cfg.n = 2 + seed % 150;
    cfg.m = 1;
    cfg.seed = seed;
    cfg.shape = static_cast<Shape>(seed % 4);
    const PlaneTree t = gen_tree(cfg);
    EXPECT_EQ(leaf_order(t).order, testing::brute_leaf_order(t)) << "seed " << seed;
  }
}

TEST(LeafOrderTest, StableUnderRelabeling) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenConfig cfg;
    cfg.n = 5 + seed * 3;
    cfg.m = 1;
    cfg.seed = seed;
    const PlaneTree t = gen_tree(cfg);
    std::vector<NodeId> perm(t.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<NodeId>> rot(t.node_count());
    for (NodeId v = 0; v < t.node_count(); ++v) {
      for (NodeId w : t.rotation(v)) rot[perm[v]].push_back(perm[w]);
    }
    const auto a = leaf_order(t).order;
    const auto b = leaf_order(PlaneTree(rot)).order;
    std::vector<NodeId> mapped;
    for (NodeId v : a) mapped.push_back(perm[v]);
    // b must be a rotation of mapped
    const auto start = std::find(mapped.begin(), mapped.end(), b.front());
    ASSERT_NE(start, mapped.end());
    std::rotate(mapped.begin(), start, mapped.end());
    EXPECT_EQ(mapped, b) << "seed " << seed;
  }
}

TEST(LeafOrderTest, EveryLeafOnce) {
  GenConfig cfg;
  cfg.n = 3000;
  cfg.m = 1000;
  cfg.seed = 5;
  const MarkedTree mt = generate(cfg);
  const LeafOrder order = leaf_order(mt);
  auto sorted = order.order;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, mt.tree().leaves());
  std::vector<NodeId> filtered;
  std::copy_if(order.order.begin(), order.order.end(), std::back_inserter(filtered),
               [&](NodeId v) { return mt.is_marked(v); });
  EXPECT_EQ(filtered, order.marked_order);
}

}  // namespace
}  // namespace leafsel
