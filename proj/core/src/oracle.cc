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

#include "leafsel/oracle.h"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "leafsel/errors.h"
#include "leafsel/intervals.h"

namespace leafsel {

VerificationReport verify_selection(const MarkedTree& mt, std::span<const NodeId> leaves) {
  std::vector<NodeId> chosen(leaves.begin(), leaves.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (NodeId leaf : chosen) {
    if (leaf >= mt.tree().node_count() || !mt.is_marked(leaf)) {
      throw InvalidInput("selected node " + std::to_string(leaf) + " is not a marked leaf");
    }
  }
  const std::size_t n = mt.tree().node_count();

  // owners of each node, as a CSR over selected indices
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (NodeId leaf : chosen) {
    for (NodeId v : mt.neighborhood(leaf)) ++offset[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<NodeId> owner(offset[n]);
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (NodeId leaf : chosen) {
      for (NodeId v : mt.neighborhood(leaf)) owner[fill[v]++] = leaf;
    }
  }
  const auto owners = [&](NodeId v) {
    return std::span<const NodeId>(owner.data() + offset[v], offset[v + 1] - offset[v]);
  };

  VerificationReport report;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (NodeId v = 0; v < n; ++v) {
    const auto own = owners(v);
    for (std::size_t i = 0; i < own.size(); ++i) {
      for (std::size_t j = i + 1; j < own.size(); ++j) {
        const auto key = std::minmax(own[i], own[j]);
        if (seen.insert(key).second) report.overlaps.push_back({key.first, key.second, v});
      }
    }
  }
  const auto owns = [&](NodeId v, NodeId leaf) {
    const auto own = owners(v);
    return std::find(own.begin(), own.end(), leaf) != own.end();
  };
  for (NodeId u = 0; u < n; ++u) {
    if (offset[u] == offset[u + 1]) continue;
    for (NodeId v : mt.tree().rotation(u)) {
      if (v < u) continue;
      for (NodeId a : owners(u)) {
        for (NodeId b : owners(v)) {
          if (a != b && !owns(v, a) && !owns(u, b)) report.bridging_edges.push_back({u, v, a, b});
        }
      }
    }
  }
  return report;
}

namespace {

struct Search {
  std::vector<std::uint32_t> conflicts;
  std::size_t best = 0;
  std::uint32_t best_set = 0;

  void run(std::uint32_t cand, std::uint32_t chosen, std::size_t size) {
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    const int i = std::countr_zero(cand);
    const std::uint32_t bit = 1u << i;
    run(cand & ~bit & ~conflicts[i], chosen | bit, size + 1);
    run(cand & ~bit, chosen, size);
  }
};

}  // namespace

Optimum max_disjoint_set(const MarkedTree& mt) {
  const std::size_t m = mt.marked_count();
  if (m > kOptimumLimit) {
    throw ParameterError("exact optimum is limited to " + std::to_string(kOptimumLimit) +
                         " marked leaves, instance has " + std::to_string(m));
  }
  const std::size_t n = mt.tree().node_count();
  std::vector<std::uint32_t> own(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (NodeId v : mt.neighborhood_at(i)) own[v] |= 1u << i;
  }
  std::vector<std::uint32_t> overlap(m, 0);
  std::vector<std::uint32_t> full(m, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (std::uint32_t bits = own[v]; bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      overlap[i] |= own[v] & ~(1u << i);
    }
  }
  for (std::size_t i = 0; i < m; ++i) full[i] = overlap[i];
  for (NodeId u = 0; u < n; ++u) {
    if (own[u] == 0) continue;
    for (NodeId v : mt.tree().rotation(u)) {
      for (std::uint32_t bits = own[u]; bits != 0; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        full[i] |= own[v] & ~(1u << i);
      }
    }
  }
  const std::uint32_t all = m == 32 ? ~0u : (1u << m) - 1;

  Optimum out;
  Search strict{full};
  strict.run(all, 0, 0);
  out.size = strict.best;
  for (std::size_t i = 0; i < m; ++i) {
    if (strict.best_set & (1u << i)) out.witness.push_back(mt.marked()[i]);
  }
  Search loose{overlap};
  loose.run(all, 0, 0);
  out.disjoint_only_size = loose.best;
  return out;
}

std::size_t existence_floor(std::size_t m) { return (m + 9) / 10; }

std::uint64_t PigeonholeInstance::r() const {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::uint64_t PigeonholeInstance::k_x() const {
  return static_cast<std::uint64_t>(
      std::count_if(counts.begin(), counts.end(), [&](std::uint64_t c) { return c > x; }));
}

bool check_pigeonhole(const PigeonholeInstance& inst) {
  if (inst.m == 0 || inst.counts.size() < inst.m) {
    throw ParameterError("pigeonhole instance needs k >= m >= 1 containers");
  }
  const std::uint64_t r = inst.r();
  const std::uint64_t c = (r + inst.m - 1) / inst.m;
  return static_cast<__int128>(inst.k_x()) * (inst.x + 1) <= static_cast<__int128>(c) * inst.m;
}

bool check_counting(const ComponentSet& components) {
  return 8 * components.l_count >= components.ungrouped.size();
}

bool is_confined(const MarkedTree& mt, const Decomposition& d, std::size_t index,
                 std::span<const NodeId> sorted_members, NodeId leaf) {
  const Component& k = d.components.components[index];
  const auto nh = mt.neighborhood(leaf);
  if (!std::includes(sorted_members.begin(), sorted_members.end(), nh.begin(), nh.end())) {
    return false;
  }
  const auto has = [&](NodeId v) { return std::binary_search(nh.begin(), nh.end(), v); };
  if (has(k.core.front())) return false;
  if (k.kind == ComponentKind::kFive && has(k.core.back())) return false;
  return true;
}

SizeBoundReport check_size_bounds(const MarkedTree& mt, const Decomposition& d,
                                  const MembershipIndex& index) {
  SizeBoundReport report;
  const auto& comps = d.components.components;
  const std::size_t n = mt.tree().node_count();
  std::vector<std::vector<NodeId>> members(comps.size());
  std::vector<std::uint32_t> tag(n, 0xffffffffu);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    members[i] = index.members(i);
    for (NodeId v : members[i]) tag[v] = static_cast<std::uint32_t>(i);
  }
  // Longest run of consecutive unmarked leaves per component, in one pass.
  std::vector<std::size_t> delta(comps.size(), 0);
  const auto& order = d.order.order;
  const std::size_t total = order.size();
  std::size_t start = 0;
  while (start < total && !mt.is_marked(order[start])) ++start;  // a marked leaf breaks runs
  std::size_t run = 0;
  std::uint32_t run_tag = 0xffffffffu;
  for (std::size_t k = 1; k <= total; ++k) {
    const NodeId leaf = order[(start + k) % total];
    const std::uint32_t t = mt.is_marked(leaf) ? 0xffffffffu : tag[leaf];
    if (t == 0xffffffffu) {
      run = 0;
    } else {
      run = t == run_tag ? run + 1 : 1;
      delta[t] = std::max(delta[t], run);
    }
    run_tag = t;
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& k = comps[i];
    const std::size_t factor = k.kind == ComponentKind::kL ? 4 : 10;
    const std::size_t bound = factor * delta[i];
    const std::size_t leaf_bound = factor / 2 * delta[i] + 1;
    for (NodeId leaf : k.marked_leaves) {
      if (!is_confined(mt, d, i, members[i], leaf)) continue;
      ++report.confined;
      const auto nh = mt.neighborhood(leaf);
      const std::size_t size = nh.size();
      const auto tree_leaves = static_cast<std::size_t>(
          std::count_if(nh.begin(), nh.end(), [&](NodeId v) { return mt.tree().is_leaf(v); }));
      if (tree_leaves > leaf_bound) ++report.leaf_count_violations;
      if (size > std::max<std::size_t>(1, bound)) {
        report.ok = false;
        report.failures.push_back({i, leaf, size, delta[i]});
      } else if (size > bound) {
        ++report.literal_violations;
      }
    }
  }
  return report;
}

bool check_existence_per_component(const MarkedTree& mt, const Decomposition& d,
                                   const MembershipIndex& index) {
  const auto& comps = d.components.components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto members = index.members(i);
    const bool any = std::any_of(
        comps[i].marked_leaves.begin(), comps[i].marked_leaves.end(),
        [&](NodeId leaf) { return is_confined(mt, d, i, members, leaf); });
    if (!any) return false;
  }
  return true;
}

}  // namespace leafsel
