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

// Seeded instance generation. Every instance produced here is a valid marked
// tree; the same config always yields the same instance.

#ifndef LEAFSEL_GENERATOR_H_
#define LEAFSEL_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "leafsel/marked_tree.h"
#include "leafsel/plane_tree.h"

namespace leafsel {

enum class Shape : std::uint8_t {
  kRandom,       // uniform edge-subdivision growth, random rotation slots
  kCaterpillar,  // one path with a leaf on every node
  kBalanced,     // minimal depth
  kLongSpine,    // a path of length >= n/4 with random subtrees hanging off it
};

enum class MarkingMode : std::uint8_t {
  kUniform,
  kClustered,  // marked leaves come in runs of `burst` consecutive leaves
};

std::optional<Shape> parse_shape(std::string_view name);
std::optional<MarkingMode> parse_marking(std::string_view name);
std::string_view to_string(Shape shape);
std::string_view to_string(MarkingMode mode);

struct GenConfig {
  std::size_t n = 16;  // leaves, >= 2
  std::size_t m = 16;  // marked leaves, 1 <= m <= n
  std::uint64_t seed = 1;
  Shape shape = Shape::kRandom;
  MarkingMode marking = MarkingMode::kUniform;
  std::size_t burst = 1;      // run length for kClustered, <= m
  std::size_t nh_growth = 1;  // mean neighborhood size in nodes; 1 = singletons
};

// Throws ParameterError on inconsistent parameters.
void check_config(const GenConfig& cfg);

struct GenStats {
  std::size_t growth_rejections = 0;      // expansions refused by a neighbor's nh
  std::size_t wraparound_rejections = 0;  // refused by the (last, first) pair
  std::size_t total_neighborhood_nodes = 0;
};

PlaneTree gen_tree(const GenConfig& cfg);

// Marks cfg.m leaves and grows neighborhoods in leaf order. Each nh(l_i)
// starts as {l_i}, takes the parent, then repeatedly expands a frontier node
// by both of its remaining neighbors, which keeps it proper. Nodes of the
// previous neighborhood and of the next one (just its leaf while it is not
// grown yet) are never taken, cyclically.
MarkedTree mark_and_grow(const PlaneTree& tree, const GenConfig& cfg, GenStats* stats = nullptr);

MarkedTree generate(const GenConfig& cfg, GenStats* stats = nullptr);

}  // namespace leafsel

#endif  // LEAFSEL_GENERATOR_H_
