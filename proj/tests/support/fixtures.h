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

// Hand-built trees shared by the test suites.

#ifndef LEAFSEL_TESTS_SUPPORT_FIXTURES_H_
#define LEAFSEL_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <map>
#include <vector>

#include "leafsel/marked_tree.h"
#include "leafsel/rational.h"

namespace leafsel::testing {

using Rotations = std::vector<std::vector<NodeId>>;
using Hoods = std::map<NodeId, std::vector<NodeId>>;

// Marks `marked` with singleton neighborhoods, then applies `overrides`.
MarkedTree make_marked(const Rotations& rotations, const std::vector<NodeId>& marked,
                       const Hoods& overrides = {});

// Double star: u=0, v=1, leaves a=2, b=3 on u and c=4, d=5 on v.
// Rotations u:[a,b,v], v:[u,c,d].
struct DoubleStar {
  static constexpr NodeId u = 0, v = 1, a = 2, b = 3, c = 4, d = 5;
  static Rotations rotations();
};
MarkedTree f1(const Hoods& overrides = {});

// Caterpillar on a path of k >= 2 nodes with ids 0..k-1. End nodes carry two
// leaves each, inner nodes one. Leaf ids: path node 0 gets k, k+1; node k-1
// gets k+2, k+3; inner node i gets k+3+i. `left[i]` puts inner node i's
// leaf on the left when walking from node 0 (default right).
struct Caterpillar {
  std::size_t k;
  NodeId path(std::size_t i) const { return static_cast<NodeId>(i); }
  NodeId first_end_leaf(int which) const { return static_cast<NodeId>(k + which); }
  NodeId last_end_leaf(int which) const { return static_cast<NodeId>(k + 2 + which); }
  NodeId leaf_at(std::size_t i) const { return static_cast<NodeId>(k + 3 + i); }
  std::vector<NodeId> all_leaves() const;
  Rotations rotations(const std::vector<bool>& left = {}) const;
};

// F2: the 7-node caterpillar, all spine leaves on one side. In the notation
// v1..v7 of the fixture, v_j is path(j - 1).
inline constexpr Caterpillar kF2{7};
MarkedTree f2(const std::vector<NodeId>& unmarked = {});

// An L-component whose first leaf carries a confined 12-node neighborhood
// with delta = 3, which makes the 4*delta bound tight.
struct TightLComponent {
  MarkedTree mt;
  NodeId leaf;
  NodeId l_node;
};
TightLComponent tight_l_component();

// A valid instance in which the representative of one L-component has a
// neighborhood larger than the 4z budget at `p`, so that traversal runs out.
struct ExhaustionCase {
  MarkedTree mt;
  NodeId leaf;  // representative with the oversized neighborhood
};
ExhaustionCase exhaustion_case(Rational p);

std::filesystem::path fixture_dir();
MarkedTree running_example();

}  // namespace leafsel::testing

#endif  // LEAFSEL_TESTS_SUPPORT_FIXTURES_H_
