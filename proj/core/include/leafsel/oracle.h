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

// Ground truth: a selection verifier, an exact optimum for small instances,
// and direct checks of the counting and size inequalities the selector
// relies on.

#ifndef LEAFSEL_ORACLE_H_
#define LEAFSEL_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leafsel/components.h"
#include "leafsel/marked_tree.h"

namespace leafsel {

struct Overlap {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  NodeId witness = kNoNode;
  friend bool operator==(const Overlap&, const Overlap&) = default;
};

// Edge (u, v) with u only in nh(a) and v only in nh(b).
struct BridgingEdge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  friend bool operator==(const BridgingEdge&, const BridgingEdge&) = default;
};

struct VerificationReport {
  std::vector<Overlap> overlaps;  // one per overlapping pair, a < b
  std::vector<BridgingEdge> bridging_edges;
  bool ok() const { return overlaps.empty() && bridging_edges.empty(); }
};

// `leaves` must be marked. Cost is linear in the tree plus the selected
// neighborhoods plus the number of reported pairs.
VerificationReport verify_selection(const MarkedTree& mt, std::span<const NodeId> leaves);

inline constexpr std::size_t kOptimumLimit = 24;

struct Optimum {
  // Largest set of marked leaves with pairwise disjoint, bridge-free
  // neighborhoods; ties go to the lexicographically smallest id list.
  std::size_t size = 0;
  std::vector<NodeId> witness;
  // Same search with only the disjointness condition.
  std::size_t disjoint_only_size = 0;
};

// Exhaustive branch and bound over the conflict graph. Throws ParameterError
// when m > kOptimumLimit.
Optimum max_disjoint_set(const MarkedTree& mt);

// ceil(m / 10).
std::size_t existence_floor(std::size_t m);

struct PigeonholeInstance {
  std::vector<std::uint64_t> counts;  // items per container, k = counts.size()
  std::uint64_t m = 1;
  std::uint64_t x = 0;

  std::uint64_t r() const;
  // Containers holding more than x items.
  std::uint64_t k_x() const;
};

// k_x * (x + 1) <= c * m with c = ceil(r / m). Requires k >= m >= 1.
bool check_pigeonhole(const PigeonholeInstance& inst);

// 8 * #L-components >= #ungrouped C-nodes.
bool check_counting(const ComponentSet& components);

struct SizeBoundReport {
  bool ok = true;
  std::size_t confined = 0;            // confined neighborhoods checked
  std::size_t literal_violations = 0;  // |nh| > 4*delta (or 10*delta) with delta = 0
  // Tree leaves inside nh above 2*delta+1 (L) or 5*delta+1 (five). Reported,
  // not part of `ok`.
  std::size_t leaf_count_violations = 0;
  struct Failure {
    std::size_t component;
    NodeId leaf;
    std::size_t nh_size;
    std::size_t delta;
  };
  std::vector<Failure> failures;
};

// A neighborhood is confined to component K when it lies inside K's member
// set and avoids K's L-node and extreme C-nodes. Every confined neighborhood
// must satisfy |nh| <= max(1, 4*delta_K) (L) or max(1, 10*delta_K) (five).
SizeBoundReport check_size_bounds(const MarkedTree& mt, const Decomposition& d,
                                  const MembershipIndex& index);

// Every component owns a marked leaf whose neighborhood is confined to it.
bool check_existence_per_component(const MarkedTree& mt, const Decomposition& d,
                                   const MembershipIndex& index);

// nh(leaf) is confined to component `index`.
bool is_confined(const MarkedTree& mt, const Decomposition& d, std::size_t index,
                 std::span<const NodeId> sorted_members, NodeId leaf);

}  // namespace leafsel

#endif  // LEAFSEL_ORACLE_H_
