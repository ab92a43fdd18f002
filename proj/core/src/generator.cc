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

#include "leafsel/generator.h"

#include <algorithm>
#include <array>
#include <random>
#include <utility>
#include <vector>

#include "leafsel/errors.h"
#include "leafsel/leaf_order.h"

namespace leafsel {

namespace {

// std distributions are implementation-defined; instances must be identical
// across standard libraries, so sampling is done by hand on the raw engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, k)
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % k;
    }
  }

  bool coin() { return (engine_() >> 63) != 0; }

  // 1 + number of failures before the first 1-in-`mean` success, so the
  // expectation is `mean`
  std::size_t geometric(std::size_t mean, std::size_t cap) {
    std::size_t t = 1;
    while (t < cap && below(mean) != 0) ++t;
    return t;
  }

 private:
  std::mt19937_64 engine_;
};

using Adjacency = std::vector<std::vector<NodeId>>;

NodeId add_node(Adjacency& adj) {
  adj.emplace_back();
  adj.back().reserve(3);
  return static_cast<NodeId>(adj.size() - 1);
}

void replace(std::vector<NodeId>& rot, NodeId from, NodeId to) {
  *std::find(rot.begin(), rot.end(), from) = to;
}

// Put a new node w on edge (u, v) and hang a fresh leaf off it. Returns the
// leaf. The leaf goes into one of the two cyclic slots at w.
NodeId subdivide(Adjacency& adj, NodeId u, NodeId v, bool flip) {
  const NodeId w = add_node(adj);
  const NodeId x = add_node(adj);
  replace(adj[u], v, w);
  replace(adj[v], u, w);
  adj[w] = flip ? std::vector<NodeId>{u, x, v} : std::vector<NodeId>{u, v, x};
  adj[x] = {w};
  return x;
}

Adjacency small_tree(std::size_t n) {
  if (n == 2) return {{1}, {0}};
  return {{1, 2, 3}, {0}, {0}, {0}};
}

Adjacency random_tree(std::size_t n, Rng& rng) {
  Adjacency adj = small_tree(2);
  adj.reserve(2 * n);
  std::vector<std::array<NodeId, 2>> edges{{0, 1}};
  edges.reserve(2 * n);
  for (std::size_t leaves = 2; leaves < n; ++leaves) {
    const std::size_t e = rng.below(edges.size());
    const auto [u, v] = edges[e];
    const NodeId x = subdivide(adj, u, v, rng.coin());
    const NodeId w = adj[x][0];
    edges[e] = {u, w};
    edges.push_back({w, v});
    edges.push_back({w, x});
  }
  return adj;
}

// Path p_0..p_{k-1} with two leaves at each end and one on every inner node.
// Inner leaves go on a random side. Returns the pendant edges through `pendant`.
Adjacency caterpillar(std::size_t n, Rng& rng, std::vector<std::array<NodeId, 2>>* pendant) {
  const std::size_t k = n - 2;
  Adjacency adj(k);
  const auto leaf = [&](NodeId at) {
    const NodeId x = add_node(adj);
    adj[x] = {at};
    if (pendant) pendant->push_back({at, x});
    return x;
  };
  for (NodeId i = 0; i < k; ++i) {
    const NodeId prev = i == 0 ? leaf(i) : i - 1;
    const NodeId next = i + 1 == k ? leaf(i) : i + 1;
    const NodeId side = leaf(i);
    if (rng.coin()) {
      adj[i] = {prev, side, next};
    } else {
      adj[i] = {prev, next, side};
    }
  }
  return adj;
}

// Rooted subtree with `leaves` leaves hanging from `parent`; returns its root.
NodeId balanced_subtree(Adjacency& adj, NodeId parent, std::size_t leaves) {
  const NodeId root = add_node(adj);
  if (leaves == 1) {
    adj[root] = {parent};
    return root;
  }
  const NodeId left = balanced_subtree(adj, root, (leaves + 1) / 2);
  const NodeId right = balanced_subtree(adj, root, leaves / 2);
  adj[root] = {parent, left, right};
  return root;
}

Adjacency balanced_tree(std::size_t n) {
  Adjacency adj;
  adj.reserve(2 * n);
  const NodeId center = add_node(adj);
  const std::size_t a = (n + 2) / 3;
  const std::size_t b = (n + 1) / 3;
  const std::size_t c = n / 3;
  std::vector<NodeId> rot;
  for (std::size_t part : {a, b, c}) rot.push_back(balanced_subtree(adj, center, part));
  adj[center] = rot;
  return adj;
}

Adjacency long_spine_tree(std::size_t n, Rng& rng) {
  const std::size_t base = std::min(n, std::max<std::size_t>(4, (n + 3) / 4 + 2));
  std::vector<std::array<NodeId, 2>> pendant;
  Adjacency adj = caterpillar(base, rng, &pendant);
  adj.reserve(2 * n);
  // Growth only happens off the path, so the path keeps its length.
  for (std::size_t leaves = base; leaves < n; ++leaves) {
    const std::size_t e = rng.below(pendant.size());
    const auto [u, v] = pendant[e];
    const NodeId x = subdivide(adj, u, v, rng.coin());
    const NodeId w = adj[x][0];
    pendant[e] = {u, w};
    pendant.push_back({w, v});
    pendant.push_back({w, x});
  }
  return adj;
}

}  // namespace

std::optional<Shape> parse_shape(std::string_view name) {
  if (name == "random") return Shape::kRandom;
  if (name == "caterpillar") return Shape::kCaterpillar;
  if (name == "balanced") return Shape::kBalanced;
  if (name == "longspine" || name == "long-spine") return Shape::kLongSpine;
  return std::nullopt;
}

std::optional<MarkingMode> parse_marking(std::string_view name) {
  if (name == "uniform") return MarkingMode::kUniform;
  if (name == "clustered") return MarkingMode::kClustered;
  return std::nullopt;
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kRandom: return "random";
    case Shape::kCaterpillar: return "caterpillar";
    case Shape::kBalanced: return "balanced";
    case Shape::kLongSpine: return "longspine";
  }
  return "unknown";
}

std::string_view to_string(MarkingMode mode) {
  switch (mode) {
    case MarkingMode::kUniform: return "uniform";
    case MarkingMode::kClustered: return "clustered";
  }
  return "unknown";
}

void check_config(const GenConfig& cfg) {
  if (cfg.n < 2) throw ParameterError("n must be at least 2");
  if (cfg.n > (std::size_t{1} << 30)) throw ParameterError("n is too large");
  if (cfg.m < 1 || cfg.m > cfg.n) {
    throw ParameterError("m must satisfy 1 <= m <= n (n=" + std::to_string(cfg.n) +
                         ", m=" + std::to_string(cfg.m) + ")");
  }
  if (cfg.burst < 1 || cfg.burst > cfg.m) throw ParameterError("burst must satisfy 1 <= burst <= m");
  if (cfg.nh_growth < 1) throw ParameterError("nh growth must be at least 1");
}

PlaneTree gen_tree(const GenConfig& cfg) {
  check_config(cfg);
  Rng rng(cfg.seed);
  const std::size_t n = cfg.n;
  if (n <= 3) return PlaneTree(small_tree(n));
  switch (cfg.shape) {
    case Shape::kRandom: return PlaneTree(random_tree(n, rng));
    case Shape::kCaterpillar: return PlaneTree(caterpillar(n, rng, nullptr));
    case Shape::kBalanced: return PlaneTree(balanced_tree(n));
    case Shape::kLongSpine: return PlaneTree(long_spine_tree(n, rng));
  }
  throw ParameterError("unknown shape");
}

MarkedTree mark_and_grow(const PlaneTree& tree, const GenConfig& cfg, GenStats* stats) {
  check_config(cfg);
  const LeafOrder order = leaf_order(tree);
  const std::size_t n = order.order.size();
  if (n != cfg.n) {
    throw ParameterError("tree has " + std::to_string(n) + " leaves, config says " +
                         std::to_string(cfg.n));
  }
  const std::size_t m = cfg.m;
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<bool> marked(n, false);
  if (cfg.marking == MarkingMode::kUniform) {
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < m; ++i) {
      std::swap(pos[i], pos[i + rng.below(n - i)]);
      marked[pos[i]] = true;
    }
  } else {
    const std::size_t runs = (m + cfg.burst - 1) / cfg.burst;
    const std::size_t r = n - m;
    std::vector<std::size_t> cuts(runs - 1);
    for (auto& cut : cuts) cut = rng.below(r + 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(r);
    std::size_t at = rng.below(n);
    std::size_t left = m;
    std::size_t prev_cut = 0;
    for (std::size_t k = 0; k < runs; ++k) {
      const std::size_t len = std::min(cfg.burst, left);
      for (std::size_t j = 0; j < len; ++j) marked[(at + j) % n] = true;
      left -= len;
      at += len + (cuts[k] - prev_cut);
      prev_cut = cuts[k];
    }
  }
  std::vector<NodeId> walk;  // marked leaves in walk order
  walk.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (marked[i]) walk.push_back(order.order[i]);
  }

  const std::size_t nodes = tree.node_count();
  std::vector<std::vector<NodeId>> nh(m);
  // forbid[v] = i + 1 while growing walk[i]; wrap[v] flags nodes held out
  // for the (last, first) pair
  std::vector<std::uint32_t> forbid(nodes, 0);
  std::vector<bool> wrap(nodes, false);
  std::vector<std::uint32_t> in_nh(nodes, 0);
  GenStats local;
  std::vector<NodeId> open;

  for (std::size_t i = 0; i < m; ++i) {
    const NodeId leaf = walk[i];
    const auto tag = static_cast<std::uint32_t>(i + 1);
    if (m > 1) {
      const std::size_t prev = (i + m - 1) % m;
      const std::size_t next = (i + 1) % m;
      const bool wrap_prev = i == 0;
      const bool wrap_next = i + 1 == m;
      for (auto [j, is_wrap] : {std::pair{prev, wrap_prev}, std::pair{next, wrap_next}}) {
        if (!nh[j].empty()) {
          for (NodeId v : nh[j]) {
            forbid[v] = tag;
            wrap[v] = is_wrap;
          }
        } else {
          forbid[walk[j]] = tag;
          wrap[walk[j]] = is_wrap;
        }
      }
    }
    const auto blocked = [&](NodeId v) {
      if (forbid[v] != tag) return false;
      ++(wrap[v] ? local.wraparound_rejections : local.growth_rejections);
      return true;
    };

    std::vector<NodeId>& set = nh[i];
    set.push_back(leaf);
    in_nh[leaf] = tag;
    const std::size_t target = rng.geometric(cfg.nh_growth, nodes);
    open.clear();
    if (target > 1) {
      const NodeId parent = tree.rotation(leaf)[0];
      if (!blocked(parent)) {
        set.push_back(parent);
        in_nh[parent] = tag;
        if (tree.degree(parent) == 3) open.push_back(parent);
      }
    }
    // Each expansion turns a node with one nh-neighbor into one with three.
    while (set.size() < target && !open.empty()) {
      const std::size_t pick = rng.below(open.size());
      const NodeId v = open[pick];
      open[pick] = open.back();
      open.pop_back();
      std::array<NodeId, 2> add{};
      std::size_t k = 0;
      for (NodeId w : tree.rotation(v)) {
        if (in_nh[w] != tag) add[k++] = w;
      }
      if (blocked(add[0]) || blocked(add[1])) continue;
      for (NodeId w : add) {
        set.push_back(w);
        in_nh[w] = tag;
        if (tree.degree(w) == 3) open.push_back(w);
      }
    }
    std::sort(set.begin(), set.end());
    local.total_neighborhood_nodes += set.size();
  }

  MarkedTree::NeighborhoodList list;
  list.reserve(m);
  for (std::size_t i = 0; i < m; ++i) list.emplace_back(walk[i], std::move(nh[i]));
  std::sort(list.begin(), list.end());
  if (stats) *stats = local;
  return MarkedTree(tree, std::move(list));
}

MarkedTree generate(const GenConfig& cfg, GenStats* stats) {
  return mark_and_grow(gen_tree(cfg), cfg, stats);
}

}  // namespace leafsel
