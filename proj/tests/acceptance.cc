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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leafsel/components.h"
#include "leafsel/errors.h"
#include "leafsel/generator.h"
#include "leafsel/instance_io.h"
#include "leafsel/labeling.h"
#include "leafsel/oracle.h"
#include "leafsel/render.h"
#include "leafsel/selector.h"
#include "leafsel/validate.h"
#include "support/fixtures.h"

namespace leafsel {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;
std::map<int, std::string> lines;  // printed in criterion order at the end

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  lines[id] = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " +
              what + " (" + detail + ")";
  std::cerr << "finished criterion " << id << std::endl;
  if (!pass) ++failures;
}

const Rational kPs[] = {Rational(1, 2), Rational(3, 4), Rational(9, 10)};
const Shape kShapes[] = {Shape::kRandom, Shape::kCaterpillar, Shape::kBalanced,
                         Shape::kLongSpine};

// ---- 1, 2, 4: the main soak ----

struct SoakCase {
  GenConfig cfg;
  Rational p;
};

std::vector<SoakCase> soak_cases() {
  // log2 n from 4 to 16, with fewer cases as n doubles
  const std::pair<int, std::size_t> plan[] = {
      {16, 12},  {15, 24},   {14, 48},   {13, 96},   {12, 180},  {11, 360}, {10, 700},
      {9, 1100}, {8, 1400},  {7, 1500},  {6, 1500},  {5, 1540},  {4, 1540},
  };
  const std::size_t num[] = {1, 6, 14, 20};  // m/n in twentieths: .05 .3 .7 1.0
  std::vector<SoakCase> out;
  std::mt19937_64 rng(20261016);
  std::uint64_t seed = 1;
  for (const auto& [k, count] : plan) {
    for (std::size_t i = 0; i < count; ++i) {
      SoakCase c;
      const std::size_t hi = std::size_t{1} << k;
      const std::size_t lo = k == 4 ? 16 : hi / 2 + 1;
      c.cfg.n = lo + rng() % (hi - lo + 1);
      c.cfg.m = std::max<std::size_t>(1, (c.cfg.n * num[out.size() % 4] + 10) / 20);
      c.cfg.seed = seed++;
      c.cfg.shape = kShapes[(out.size() / 4) % 4];
      c.cfg.marking = out.size() % 7 == 0 ? MarkingMode::kClustered : MarkingMode::kUniform;
      c.cfg.burst = std::min<std::size_t>(c.cfg.m, 2 + out.size() % 9);
      c.cfg.nh_growth = 1 + (out.size() / 3) % 8;
      c.p = kPs[out.size() % 3];
      out.push_back(c);
    }
  }
  return out;
}

void soak() {
  const auto t0 = Clock::now();
  const auto cases = soak_cases();
  std::size_t yield_bad = 0, verify_bad = 0, counting_bad = 0, counting_checked = 0;
  std::size_t counting_equal = 0, fallbacks = 0, invalid = 0;
  std::size_t outcomes[3] = {0, 0, 0};
  std::size_t min_n = ~std::size_t{0}, max_n = 0;
  for (const SoakCase& c : cases) {
    const MarkedTree mt = generate(c.cfg);
    min_n = std::min(min_n, c.cfg.n);
    max_n = std::max(max_n, c.cfg.n);
    Selection sel;
    try {
      sel = select_leaves(mt, c.p);
    } catch (const ValidationError&) {
      ++invalid;
      continue;
    }
    if (!meets_yield(sel.leaves.size(), mt.marked_count(), c.p)) ++yield_bad;
    if (!verify_selection(mt, sel.leaves).ok()) ++verify_bad;
    outcomes[0] += sel.completed;
    outcomes[1] += sel.delimiter_hits;
    outcomes[2] += sel.exhausted;
    std::size_t l = sel.l_components, ungrouped = sel.ungrouped;
    bool have = !sel.fallback;
    if (sel.fallback) {
      ++fallbacks;
      if (mt.marked_count() >= 2) {
        try {
          const Decomposition d = decompose(mt);
          l = d.components.l_count;
          ungrouped = d.components.ungrouped.size();
          have = true;
        } catch (const DegenerateTree&) {
        }
      }
    }
    if (have) {
      ++counting_checked;
      if (8 * l < ungrouped) ++counting_bad;
      if (8 * l == ungrouped) ++counting_equal;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream base;
  base << cases.size() << " instances, n " << min_n << ".." << max_n << ", " << invalid
       << " invalid, " << fallbacks << " small-instance scans, " << secs << " s";
  report(1, cases.size() == 10000 && invalid == 0 && yield_bad == 0 && secs < 120,
         "10*|selected| >= p*m in exact arithmetic",
         base.str() + ", " + std::to_string(yield_bad) + " below the bound; outcomes completed/" +
             "delimiter/exhausted = " + std::to_string(outcomes[0]) + "/" +
             std::to_string(outcomes[1]) + "/" + std::to_string(outcomes[2]));
  report(2, invalid == 0 && verify_bad == 0, "selections are disjoint and bridge-free",
         std::to_string(verify_bad) + " failing of " + std::to_string(cases.size()));
  report(4, counting_bad == 0 && counting_equal == 0 && counting_checked > 0,
         "8*#L-components > #ungrouped C-nodes",
         std::to_string(counting_checked) + " decomposed, " + std::to_string(counting_bad) +
             " violations, " + std::to_string(counting_equal) + " equalities");
}

// ---- 3: exact optimum on small m ----

void existence() {
  const auto t0 = Clock::now();
  std::size_t floor_bad = 0, above_bad = 0, witness_bad = 0, gap = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    GenConfig cfg;
    cfg.seed = 50000 + i;
    cfg.m = 1 + i % 20;
    cfg.n = std::max<std::size_t>(2, cfg.m + (i * 11) % 60);
    cfg.shape = kShapes[i % 4];
    cfg.nh_growth = 1 + i % 7;
    const MarkedTree mt = generate(cfg);
    const Optimum opt = max_disjoint_set(mt);
    if (opt.size < existence_floor(mt.marked_count())) ++floor_bad;
    if (!verify_selection(mt, opt.witness).ok()) ++witness_bad;
    gap += opt.disjoint_only_size > opt.size ? 1 : 0;
    for (const Rational& p : kPs) {
      if (select_leaves(mt, p).leaves.size() > opt.size) ++above_bad;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "1000 instances with m <= 20, " << floor_bad << " below ceil(m/10), " << above_bad
    << " selections above the optimum, " << witness_bad << " bad witnesses, " << gap
    << " with a bridge gap, " << secs << " s";
  report(3, floor_bad == 0 && above_bad == 0 && witness_bad == 0 && secs < 60,
         "optimum >= ceil(m/10) and selection <= optimum", d.str());
}

// ---- 5: size bounds of confined neighborhoods ----

void size_bounds() {
  std::size_t failed = 0, literal = 0, confined = 0, checked = 0, leaf_form = 0;
  std::size_t failed_at_zero = 0;
  const auto tally = [&](const MarkedTree& mt) {
    Decomposition d;
    try {
      d = decompose(mt);
    } catch (const DegenerateTree&) {
      return;
    }
    const MembershipIndex index(mt, d);
    const SizeBoundReport r = check_size_bounds(mt, d, index);
    failed += r.failures.size();
    for (const auto& f : r.failures) failed_at_zero += f.delta == 0 ? 1 : 0;
    literal += r.literal_violations;
    leaf_form += r.leaf_count_violations;
    confined += r.confined;
    ++checked;
  };
  for (std::uint64_t i = 0; i < 1000; ++i) {
    GenConfig cfg;
    cfg.seed = 70000 + i;
    cfg.n = 16 + (i * 97) % 2000;
    cfg.m = std::max<std::size_t>(4, cfg.n * (1 + i % 4) / 5);
    cfg.shape = kShapes[i % 4];
    cfg.marking = i % 3 == 0 ? MarkingMode::kClustered : MarkingMode::kUniform;
    cfg.burst = std::min<std::size_t>(cfg.m, 1 + i % 5);
    cfg.nh_growth = 1 + i % 10;
    tally(generate(cfg));
  }
  const auto tight = testing::tight_l_component();
  const std::size_t before = failed;
  tally(tight.mt);
  const bool tight_ok = failed == before && tight.mt.neighborhood(tight.leaf).size() == 12;
  std::ostringstream d;
  d << checked << " decomposed instances, " << confined << " confined neighborhoods, " << failed
    << " above max(1, bound) (" << failed_at_zero << " at delta = 0), "
    << leaf_form << " above the tree-leaf count 2 delta + 1 / 5 delta + 1, " << literal << " literal-form violations at delta = 0, tight 12 <= 12 "
    << (tight_ok ? "holds" : "fails");
  report(5, failed == 0 && tight_ok && checked >= 1000, "|nh| <= max(1, 4 delta) / max(1, 10 delta)",
         d.str());
}

// ---- 6: pigeonhole ----

void pigeonhole() {
  std::mt19937_64 rng(6);
  std::size_t bad = 0;
  for (int t = 0; t < 10000; ++t) {
    PigeonholeInstance inst;
    inst.m = 1 + rng() % 50;
    const std::size_t k = inst.m + rng() % 50;
    const int style = t % 3;
    const std::uint64_t cap = 1 + rng() % 40;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t load = rng() % cap;
      if (style == 1 && rng() % 4 != 0) load = 0;  // sparse, a few heavy
      if (style == 2) load = cap;                  // flat
      inst.counts.push_back(load);
    }
    inst.x = rng() % (inst.r() + 2);
    if (!check_pigeonhole(inst)) ++bad;
  }
  std::size_t tight = 0, tight_bad = 0;
  for (std::uint64_t m = 1; m <= 20; ++m) {
    for (std::uint64_t x = 0; x <= 5; ++x) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        // k = s*m containers of x+1 items: c = s(x+1), so c*m/(x+1) = k
        PigeonholeInstance inst;
        inst.m = m;
        inst.x = x;
        inst.counts.assign(s * m, x + 1);
        const std::uint64_t c = (inst.r() + m - 1) / m;
        const bool equal = inst.k_x() * (x + 1) == c * m;
        if (!check_pigeonhole(inst) || !equal) ++tight_bad;
        ++tight;
      }
    }
  }
  report(6, bad == 0 && tight_bad == 0, "k_x <= c*m/(x+1) in exact arithmetic",
         "10000 random instances, " + std::to_string(bad) + " violations; " +
             std::to_string(tight) + " equal-load cases, " + std::to_string(tight_bad) +
             " not tight");
}

// ---- 7: linear steps ----

std::uint64_t family_steps(std::size_t n, const Rational& p) {
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < 3; ++s) {
    GenConfig cfg;
    cfg.n = n;
    cfg.m = n * 3 / 10;
    cfg.seed = 900 + s;
    cfg.shape = Shape::kRandom;
    cfg.nh_growth = 4;
    const MarkedTree mt = generate(cfg);
    SelectOptions opt;
    opt.validate_input = false;
    total += select_leaves(mt, p, opt).total_steps;
  }
  return total;
}

void linear_time() {
  const auto t0 = Clock::now();
  std::vector<double> ratio;
  std::ostringstream d;
  d.precision(4);
  for (int k = 10; k <= 16; ++k) {
    const std::size_t n = std::size_t{1} << k;
    ratio.push_back(static_cast<double>(family_steps(n, Rational(1, 2))) / (3.0 * n));
    d << "2^" << k << ":" << ratio.back() << " ";
  }
  std::vector<double> sorted = ratio;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  double worst = 0;
  for (double r : ratio) worst = std::max(worst, std::abs(r - median) / median);
  const std::uint64_t half = family_steps(1 << 14, Rational(1, 2));
  const std::uint64_t nine = family_steps(1 << 14, Rational(9, 10));
  const double factor = static_cast<double>(nine) / static_cast<double>(half);
  const double secs = seconds_since(t0);
  d << "| median " << median << ", worst deviation " << 100 * worst << "%, steps(9/10)/steps(1/2) at 2^14 = "
    << factor << ", " << secs << " s";
  report(7, worst <= 0.15 && nine <= 6 * half && secs < 60, "steps/n flat within 15%, p = 9/10 within 6x",
         d.str());
}

// ---- 8: running example ----

void running_example() {
  const MarkedTree mt = testing::running_example();
  const Decomposition d = decompose(mt);
  const auto& lab = d.labeling.label;
  bool six = false;
  for (const Spine& s : d.spines) {
    if (s.c_nodes.size() != 6) continue;
    const NodeLabel a = lab[s.delimiters[0]];
    const NodeLabel b = lab[s.delimiters[1]];
    six = (a == NodeLabel::kL && b == NodeLabel::kJ) || (a == NodeLabel::kJ && b == NodeLabel::kL);
  }
  const bool ok = validate(mt).ok() && d.components.l_count == 3 && d.components.five_count == 2 &&
                  d.components.ungrouped.size() == 1 && six;
  std::ostringstream detail;
  detail << d.components.l_count << " L-components, " << d.components.five_count
         << " 5-components, " << d.components.ungrouped.size()
         << " ungrouped C-node, 6-node spine between an L- and a J-node " << (six ? "found" : "missing");
  report(8, ok, "fixture decomposition counts", detail.str());
}

// ---- 9: byte-identical outputs ----

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LEAFSEL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "leafsel_acceptance";
  fs::create_directories(dir);
  std::size_t compared = 0, differing = 0, errors = 0;
  std::vector<std::string> inputs;
  for (std::uint64_t i = 0; i < 4; ++i) {
    GenConfig cfg;
    cfg.n = 500 + 700 * i;
    cfg.m = cfg.n / (1 + i);
    cfg.seed = 31 + i;
    cfg.shape = kShapes[i];
    cfg.nh_growth = 1 + 2 * i;
    const std::string path = (dir / ("in" + std::to_string(i) + ".json")).string();
    write_file_atomic(path, serialize_instance(generate(cfg)));
    inputs.push_back(path);
  }
  inputs.push_back((testing::fixture_dir() / "running-example.json").string());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string outputs[2];
    for (int round = 0; round < 2; ++round) {
      const std::string tag = std::to_string(i) + "_" + std::to_string(round);
      const std::string sel = (dir / ("sel" + tag)).string();
      const std::string stats = (dir / ("stats" + tag)).string();
      const std::string dot = (dir / ("dot" + tag)).string();
      const std::string svg = (dir / ("svg" + tag)).string();
      const std::string limit = i + 1 == inputs.size() ? " --small-limit 0" : "";
      int code = run_cli("select --in " + inputs[i] + " --p 3/4 --out " + sel + " --stats " +
                         stats + limit).code;
      code |= run_cli("render --in " + inputs[i] + " --selection " + sel + " --format dot --out " +
                      dot).code;
      code |= run_cli("render --in " + inputs[i] + " --selection " + sel + " --format svg --out " +
                      svg).code;
      if (code != 0) {
        ++errors;
        continue;
      }
      outputs[round] = read_file(sel) + "\x1f" + read_file(stats) + "\x1f" + read_file(dot) +
                       "\x1f" + read_file(svg);
    }
    ++compared;
    if (outputs[0] != outputs[1] || outputs[0].empty()) ++differing;
  }
  fs::remove_all(dir);
  report(9, errors == 0 && differing == 0, "selection, stats and renders are byte-identical across runs",
         std::to_string(compared) + " inputs x (selection, stats, dot, svg), " +
             std::to_string(differing) + " differing, " + std::to_string(errors) + " tool errors");
}

}  // namespace
}  // namespace leafsel

int main() {
  using namespace leafsel;
  soak();
  existence();
  size_bounds();
  pigeonhole();
  linear_time();
  running_example();
  determinism();
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  return failures == 0 ? 0 : 1;
}
