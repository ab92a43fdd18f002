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

#include "leafsel/selector.h"

#include "leafsel/leaf_order.h"
#include "leafsel/validate.h"

namespace leafsel {

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kCompleted: return "completed";
    case OutcomeKind::kDelimiterHit: return "delimiterHit";
    case OutcomeKind::kBudgetExhausted: return "exhausted";
  }
  return "unknown";
}

Budget compute_budget(std::uint64_t r, std::uint64_t m, Rational p) {
  if (m == 0) throw ParameterError("no marked leaves");
  if (!p.in_open_unit_interval()) {
    throw ParameterError("p must lie strictly between 0 and 1, got " + p.to_string());
  }
  Budget b;
  // c >= 1 keeps the budget positive when there are no unmarked leaves.
  b.c = std::max<std::uint64_t>(1, (r + m - 1) / m);
  // 10c / (1 - p) = 10c * den / (den - num)
  const auto den = static_cast<std::uint64_t>(p.den());
  const auto gap = static_cast<std::uint64_t>(p.den() - p.num());
  const std::uint64_t numer = 10 * b.c * den;
  b.z = (numer + gap - 1) / gap - 1;
  return b;
}

bool meets_yield(std::size_t selected, std::size_t m, Rational p) {
  return static_cast<__int128>(10) * selected * p.den() >=
         static_cast<__int128>(p.num()) * static_cast<__int128>(m);
}

TraversalOutcome budgeted_traverse(const MarkedTree& mt, NodeId leaf,
                                   std::span<const NodeId> delimiters, std::uint64_t budget) {
  if (!mt.is_marked(leaf)) throw InvariantError("traversal from an unmarked node");
  const auto nh = mt.neighborhood(leaf);
  return budgeted_traverse(
      mt.tree(), leaf,
      [nh](NodeId v) { return std::binary_search(nh.begin(), nh.end(), v); }, delimiters,
      budget);
}

Selection select_from_decomposition(const MarkedTree& mt, const Decomposition& d, Rational p) {
  Selection sel;
  sel.budget = compute_budget(mt.unmarked_leaf_count(), mt.marked_count(), p);
  sel.preprocessing_steps = d.steps;
  sel.l_components = d.components.l_count;
  sel.five_components = d.components.five_count;
  sel.ungrouped = d.components.ungrouped.size();
  sel.per_component.reserve(d.components.components.size());

  for (const Component& k : d.components.components) {
    const bool is_l = k.kind == ComponentKind::kL;
    const std::span<const NodeId> delimiters(k.delimiting.data(), is_l ? 1 : 2);
    const std::uint64_t allowance = is_l ? sel.budget.l_steps() : sel.budget.five_steps();
    ComponentResult res;
    res.kind = k.kind;
    res.outcome = budgeted_traverse(mt, k.representative, delimiters, allowance);
    switch (res.outcome.kind) {
      case OutcomeKind::kCompleted:
        res.selected = k.representative;
        ++sel.completed;
        break;
      case OutcomeKind::kDelimiterHit:
        res.selected = res.outcome.hit == k.delimiting[0] ? k.redirect[0] : k.redirect[1];
        ++sel.delimiter_hits;
        break;
      case OutcomeKind::kBudgetExhausted:
        ++sel.exhausted;
        break;
    }
    if (res.selected != kNoNode) sel.leaves.push_back(res.selected);
    sel.traversal_steps += res.outcome.steps;
    sel.per_component.push_back(res);
  }
  std::sort(sel.leaves.begin(), sel.leaves.end());
  sel.total_steps = sel.preprocessing_steps + sel.traversal_steps;
  return sel;
}

namespace {

// One marked leaf, preferring one whose neighborhood meets no other marked
// neighborhood. A single leaf is always a valid answer.
Selection select_single(const MarkedTree& mt, Rational p) {
  Selection sel;
  sel.fallback = true;
  sel.budget = compute_budget(mt.unmarked_leaf_count(), mt.marked_count(), p);
  const LeafOrder order = leaf_order(mt);
  std::vector<std::uint32_t> owners(mt.tree().node_count(), 0);
  std::uint64_t steps = order.walk_steps;
  for (std::size_t i = 0; i < mt.marked_count(); ++i) {
    for (NodeId v : mt.neighborhood_at(i)) ++owners[v];
    steps += mt.neighborhood_at(i).size();
  }
  NodeId pick = order.marked_order.front();
  for (NodeId leaf : order.marked_order) {
    const auto nh = mt.neighborhood(leaf);
    steps += nh.size();
    if (std::all_of(nh.begin(), nh.end(), [&](NodeId v) { return owners[v] == 1; })) {
      pick = leaf;
      break;
    }
  }
  sel.leaves = {pick};
  sel.preprocessing_steps = steps;
  sel.total_steps = steps;
  return sel;
}

}  // namespace

Selection select_leaves(const MarkedTree& mt, Rational p, const SelectOptions& options) {
  if (!p.in_open_unit_interval()) {
    throw ParameterError("p must lie strictly between 0 and 1, got " + p.to_string());
  }
  if (options.validate_input) {
    ValidationReport report = validate(mt);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  if (mt.marked_count() <= options.small_instance_limit || mt.marked_count() < 4) {
    return select_single(mt, p);
  }
  Decomposition d;
  try {
    d = decompose(mt);
  } catch (const DegenerateTree&) {
    return select_single(mt, p);
  }
  return select_from_decomposition(mt, d, p);
}

}  // namespace leafsel
