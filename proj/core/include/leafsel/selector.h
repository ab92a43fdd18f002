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

// Leaf selection with per-component traversal budgets.
//
// For every component the neighborhood of its representative leaf is walked
// depth first for at most 4z (L-component) or 10z (5-component) node visits,
// where z = ceil(10c / (1 - p)) - 1 and c = max(1, ceil(r / m)). Reaching a
// delimiting node redirects the choice to the neighboring leaf behind it; a
// complete walk that reaches no delimiting node selects the representative;
// running out of budget abandons the component. At least p*m/10 leaves are
// returned, with O(n / (1 - p)) node visits overall.

#ifndef LEAFSEL_SELECTOR_H_
#define LEAFSEL_SELECTOR_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "leafsel/components.h"
#include "leafsel/errors.h"
#include "leafsel/marked_tree.h"
#include "leafsel/plane_tree.h"
#include "leafsel/rational.h"

namespace leafsel {

struct Budget {
  std::uint64_t c = 1;
  std::uint64_t z = 0;

  std::uint64_t l_steps() const { return 4 * z; }
  std::uint64_t five_steps() const { return 10 * z; }
};

// Throws ParameterError if m == 0 or p is not in (0, 1).
Budget compute_budget(std::uint64_t r, std::uint64_t m, Rational p);

enum class OutcomeKind : std::uint8_t { kCompleted, kDelimiterHit, kBudgetExhausted };

std::string_view to_string(OutcomeKind kind);

struct TraversalOutcome {
  OutcomeKind kind = OutcomeKind::kCompleted;
  NodeId hit = kNoNode;  // the delimiting node reached, for kDelimiterHit
  std::uint64_t steps = 0;

  friend bool operator==(const TraversalOutcome&, const TraversalOutcome&) = default;
};

// Depth-first walk over the subtree {v : in_neighborhood(v)} starting at
// `start`. A step is the first visit of a node; children are taken in
// rotation order after the arrival edge. The walk stops at the first visited
// node listed in `delimiters`. `in_neighborhood` may be any predicate, so
// implicit neighborhoods work too.
template <class InNeighborhood>
TraversalOutcome budgeted_traverse(const PlaneTree& tree, NodeId start,
                                   InNeighborhood&& in_neighborhood,
                                   std::span<const NodeId> delimiters, std::uint64_t budget) {
  if (!in_neighborhood(start)) {
    throw InvariantError("traversal start is not inside its own neighborhood");
  }
  const auto is_delimiter = [&](NodeId v) {
    return std::find(delimiters.begin(), delimiters.end(), v) != delimiters.end();
  };
  TraversalOutcome out;
  if (budget == 0) {
    out.kind = OutcomeKind::kBudgetExhausted;
    return out;
  }
  out.steps = 1;
  if (is_delimiter(start)) {
    out.kind = OutcomeKind::kDelimiterHit;
    out.hit = start;
    return out;
  }

  struct Frame {
    NodeId node;
    NodeId parent;
    std::uint32_t next;  // children already tried
  };
  std::vector<Frame> stack;
  stack.push_back({start, kNoNode, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto rot = tree.rotation(f.node);
    const std::size_t deg = rot.size();
    const std::size_t children = f.parent == kNoNode ? deg : deg - 1;
    if (f.next >= children) {
      stack.pop_back();
      continue;
    }
    std::size_t base = 0;
    if (f.parent != kNoNode) base = tree.index_of(f.node, f.parent) + 1;
    const NodeId w = rot[(base + f.next) % deg];
    ++f.next;
    if (!in_neighborhood(w)) continue;
    if (out.steps == budget) {
      out.kind = OutcomeKind::kBudgetExhausted;
      return out;
    }
    ++out.steps;
    if (is_delimiter(w)) {
      out.kind = OutcomeKind::kDelimiterHit;
      out.hit = w;
      return out;
    }
    const NodeId parent = f.node;  // `f` dies on push_back
    stack.push_back({w, parent, 0});
  }
  out.kind = OutcomeKind::kCompleted;
  return out;
}

// Walks nh(leaf) of a marked tree. Throws InvariantError if leaf is not in
// its own neighborhood.
TraversalOutcome budgeted_traverse(const MarkedTree& mt, NodeId leaf,
                                   std::span<const NodeId> delimiters, std::uint64_t budget);

struct ComponentResult {
  ComponentKind kind = ComponentKind::kL;
  TraversalOutcome outcome;
  NodeId selected = kNoNode;
};

struct Selection {
  std::vector<NodeId> leaves;  // ascending
  // Aligned with Decomposition::components.components; empty on fallback.
  std::vector<ComponentResult> per_component;
  Budget budget;
  std::uint64_t preprocessing_steps = 0;
  std::uint64_t traversal_steps = 0;
  std::uint64_t total_steps = 0;
  bool fallback = false;

  std::size_t l_components = 0;
  std::size_t five_components = 0;
  std::size_t ungrouped = 0;
  std::size_t completed = 0;
  std::size_t delimiter_hits = 0;
  std::size_t exhausted = 0;
};

struct SelectOptions {
  // Instances with m at or below this use the direct single-leaf scan.
  std::size_t small_instance_limit = 10;
  bool validate_input = true;
};

// Throws ValidationError for an invalid instance and ParameterError for p
// outside (0, 1).
Selection select_leaves(const MarkedTree& mt, Rational p, const SelectOptions& options = {});

// Runs only the per-component traversals on a precomputed decomposition.
Selection select_from_decomposition(const MarkedTree& mt, const Decomposition& d, Rational p);

// 10 * selected >= p * m, exactly.
bool meets_yield(std::size_t selected, std::size_t m, Rational p);

}  // namespace leafsel

#endif  // LEAFSEL_SELECTOR_H_
