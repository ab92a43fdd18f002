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

// leafsel: generate, validate, select, verify and draw marked trees.
//
// Exit codes: 0 success, 1 semantic failure (invalid instance, bad selection,
// violated bound), 2 usage or parse error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leafsel/errors.h"
#include "leafsel/generator.h"
#include "leafsel/instance_io.h"
#include "leafsel/oracle.h"
#include "leafsel/rational.h"
#include "leafsel/render.h"
#include "leafsel/selector.h"
#include "leafsel/validate.h"

namespace {

using namespace leafsel;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// A semantic failure that has already been reported.
struct Failed {
  int code;
};

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty() || out_path == "-") {
    std::cout << contents;
  } else {
    write_file_atomic(out_path, contents);
  }
}

MarkedTree load_valid(const std::string& path) {
  MarkedTree mt = parse_instance(read_file(path));
  ValidationReport report = validate(mt);
  if (!report.ok()) {
    std::cerr << to_json(report);
    throw Failed{kFailure};
  }
  return mt;
}

Rational parse_p(const std::string& text) {
  const Rational p = Rational::parse(text);
  if (!p.in_open_unit_interval()) {
    throw ParameterError("p must lie strictly between 0 and 1, got " + text);
  }
  return p;
}

// "a,b,c" with each item either an integer or "2^k"
std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t value = 0;
    try {
      const auto caret = item.find('^');
      if (caret != std::string::npos) {
        const auto base = std::stoull(item.substr(0, caret));
        const auto exp = std::stoull(item.substr(caret + 1));
        if (exp > 30) throw ParameterError("size exponent too large: " + item);
        value = 1;
        for (unsigned long long k = 0; k < exp; ++k) value *= base;
      } else {
        value = std::stoull(item);
      }
    } catch (const std::logic_error&) {
      throw ParameterError("bad size '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw ParameterError("no sizes given");
  return out;
}

std::vector<Rational> parse_p_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_p(item));
  }
  if (out.empty()) throw ParameterError("no p values given");
  return out;
}

std::string stats_json(const Selection& sel, Rational p, std::size_t m) {
  Json doc;
  doc["p"] = p.to_string();
  doc["m"] = m;
  doc["selected"] = sel.leaves.size();
  doc["fallback"] = sel.fallback;
  doc["budget"] = {{"c", sel.budget.c},
                   {"z", sel.budget.z},
                   {"lSteps", sel.budget.l_steps()},
                   {"fiveSteps", sel.budget.five_steps()}};
  doc["steps"] = {{"preprocessing", sel.preprocessing_steps},
                  {"traversal", sel.traversal_steps},
                  {"total", sel.total_steps}};
  Json per = Json::array();
  for (const ComponentResult& res : sel.per_component) {
    Json item;
    item["kind"] = res.kind == ComponentKind::kL ? "L" : "five";
    item["outcome"] = std::string(to_string(res.outcome.kind));
    item["steps"] = res.outcome.steps;
    item["hit"] = res.outcome.hit == kNoNode ? Json(nullptr) : Json(res.outcome.hit);
    item["selected"] = res.selected == kNoNode ? Json(nullptr) : Json(res.selected);
    per.push_back(std::move(item));
  }
  doc["components"] = std::move(per);
  return doc.dump(2) + "\n";
}

struct GenerateArgs {
  GenConfig cfg;
  std::string shape = "random";
  std::string marking = "uniform";
  std::string out;
};

int run_generate(GenerateArgs& a) {
  const auto shape = parse_shape(a.shape);
  if (!shape) throw ParameterError("unknown shape '" + a.shape + "'");
  const auto marking = parse_marking(a.marking);
  if (!marking) throw ParameterError("unknown marking '" + a.marking + "'");
  a.cfg.shape = *shape;
  a.cfg.marking = *marking;
  GenStats stats;
  const MarkedTree mt = generate(a.cfg, &stats);
  if (stats.growth_rejections + stats.wraparound_rejections > 0) {
    std::cerr << "generate: " << stats.growth_rejections << " growth steps and "
              << stats.wraparound_rejections
              << " wraparound steps refused; neighborhoods stopped short\n";
  }
  emit(a.out, serialize_instance(mt));
  return kOk;
}

struct SelectArgs {
  std::string in;
  std::string p;
  std::string out;
  std::string stats;
  std::size_t small_limit = 10;
};

int run_select(const SelectArgs& a) {
  const Rational p = parse_p(a.p);
  const MarkedTree mt = load_valid(a.in);
  SelectOptions opts;
  opts.small_instance_limit = a.small_limit;
  opts.validate_input = false;
  const Selection sel = select_leaves(mt, p, opts);
  emit(a.out, serialize_selection(sel));
  if (!a.stats.empty()) emit(a.stats, stats_json(sel, p, mt.marked_count()));
  return kOk;
}

struct VerifyArgs {
  std::string in;
  std::string selection;
};

int run_verify(const VerifyArgs& a) {
  const MarkedTree mt = parse_instance(read_file(a.in));
  const std::vector<NodeId> leaves = parse_selection(read_file(a.selection));
  const VerificationReport report = verify_selection(mt, leaves);
  std::cout << to_json(report);
  return report.ok() ? kOk : kFailure;
}

struct ValidateArgs {
  std::string in;
};

int run_validate(const ValidateArgs& a) {
  const MarkedTree mt = parse_instance(read_file(a.in));
  const ValidationReport report = validate(mt);
  std::cout << to_json(report);
  return report.ok() ? kOk : kFailure;
}

struct OracleArgs {
  std::string in;
  std::string compare_p;
};

int run_oracle(const OracleArgs& a) {
  const MarkedTree mt = load_valid(a.in);
  const Optimum opt = max_disjoint_set(mt);
  const std::size_t floor = existence_floor(mt.marked_count());
  Json doc;
  doc["optimum"] = opt.size;
  doc["floor"] = floor;
  bool ok = opt.size >= floor;
  if (!a.compare_p.empty()) {
    const Selection sel = select_leaves(mt, parse_p(a.compare_p));
    doc["algorithm"] = sel.leaves.size();
    ok = ok && sel.leaves.size() <= opt.size;
  }
  std::cout << doc.dump(2) << "\n";
  if (!ok) std::cerr << "oracle: bound violated\n";
  return ok ? kOk : kFailure;
}

struct BenchArgs {
  std::string sizes = "2^10,2^12,2^14,2^16";
  std::string p_list = "1/2,3/4,9/10";
  std::size_t seeds = 3;
  std::string m_frac = "3/10";
  std::string shape = "random";
  std::size_t nh_growth = 4;
  std::string csv;
};

int run_bench(const BenchArgs& a) {
  const auto sizes = parse_sizes(a.sizes);
  const auto ps = parse_p_list(a.p_list);
  const Rational frac = Rational::parse(a.m_frac);
  if (frac.num() <= 0 || frac.num() > frac.den()) {
    throw ParameterError("m fraction must lie in (0, 1]");
  }
  const auto shape = parse_shape(a.shape);
  if (!shape) throw ParameterError("unknown shape '" + a.shape + "'");
  if (a.seeds == 0) throw ParameterError("at least one seed is needed");

  std::ostringstream out;
  out << "n,m,p,steps,wall_ns,selected\n";
  bool ok = true;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed = 1; seed <= a.seeds; ++seed) {
      GenConfig cfg;
      cfg.n = n;
      cfg.m = std::max<std::size_t>(1, n * static_cast<std::size_t>(frac.num()) /
                                           static_cast<std::size_t>(frac.den()));
      cfg.seed = seed;
      cfg.shape = *shape;
      cfg.nh_growth = a.nh_growth;
      const MarkedTree mt = generate(cfg);
      for (const Rational& p : ps) {
        SelectOptions opts;
        opts.validate_input = false;
        const auto t0 = std::chrono::steady_clock::now();
        const Selection sel = select_leaves(mt, p, opts);
        const auto t1 = std::chrono::steady_clock::now();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        out << n << "," << cfg.m << "," << p.to_string() << "," << sel.total_steps << "," << ns
            << "," << sel.leaves.size() << "\n";
        ok = ok && meets_yield(sel.leaves.size(), cfg.m, p);
      }
    }
  }
  emit(a.csv, out.str());
  if (!ok) std::cerr << "bench: a row missed the yield bound\n";
  return ok ? kOk : kFailure;
}

struct RenderArgs {
  std::string in;
  std::string selection;
  std::string format = "dot";
  std::string out;
};

int run_render(const RenderArgs& a) {
  const MarkedTree mt = parse_instance(read_file(a.in));
  std::vector<NodeId> leaves;
  if (!a.selection.empty()) leaves = parse_selection(read_file(a.selection));
  emit(a.out, a.format == "svg" ? render_svg(mt, leaves) : render_dot(mt, leaves));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Select marked leaves with pairwise separated neighborhoods in plane trees"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random valid instance");
  generate_cmd->add_option("--n", gen.cfg.n, "Total number of leaves (>= 2)")->required();
  generate_cmd->add_option("--m", gen.cfg.m, "Number of marked leaves (1..n)")->required();
  generate_cmd->add_option("--seed", gen.cfg.seed, "Random seed");
  generate_cmd->add_option("--shape", gen.shape, "random|caterpillar|balanced|longspine");
  generate_cmd->add_option("--marking", gen.marking, "uniform|clustered");
  generate_cmd->add_option("--burst", gen.cfg.burst, "Run length for clustered marking");
  generate_cmd->add_option("--nh-growth", gen.cfg.nh_growth, "Mean neighborhood size in nodes");
  generate_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  ValidateArgs val;
  auto* validate_cmd = app.add_subcommand("validate", "Check an instance and print the report");
  validate_cmd->add_option("--in", val.in, "Instance file")->required();

  SelectArgs sel;
  auto* select_cmd = app.add_subcommand("select", "Select leaves from an instance");
  select_cmd->add_option("--in", sel.in, "Instance file")->required();
  select_cmd->add_option("--p", sel.p, "Target fraction as num/den, 0 < p < 1")->required();
  select_cmd->add_option("--out", sel.out, "Selection file (stdout if omitted)");
  select_cmd->add_option("--stats", sel.stats, "Write per-component statistics here");
  select_cmd->add_option("--small-limit", sel.small_limit,
                         "Instances with at most this many marked leaves pick a single leaf");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a selection against an instance");
  verify_cmd->add_option("--in", ver.in, "Instance file")->required();
  verify_cmd->add_option("--selection", ver.selection, "Selection file")->required();

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum for small instances");
  oracle_cmd->add_option("--in", orc.in, "Instance file")->required();
  oracle_cmd->add_option("--compare-p", orc.compare_p, "Also run the selector at this p");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Step counts over a family of instances");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma separated leaf counts, 2^k allowed");
  bench_cmd->add_option("--p-list", bench.p_list, "Comma separated fractions num/den");
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per size");
  bench_cmd->add_option("--m-frac", bench.m_frac, "Marked fraction of the leaves, num/den");
  bench_cmd->add_option("--shape", bench.shape, "Tree shape");
  bench_cmd->add_option("--nh-growth", bench.nh_growth, "Mean neighborhood size");
  bench_cmd->add_option("--csv", bench.csv, "Output file (stdout if omitted)");

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Draw an instance as DOT or SVG");
  render_cmd->add_option("--in", ren.in, "Instance file")->required();
  render_cmd->add_option("--selection", ren.selection, "Selection to highlight");
  render_cmd->add_option("--format", ren.format, "dot|svg")
      ->check(CLI::IsMember({"dot", "svg"}));
  render_cmd->add_option("--out", ren.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*validate_cmd) return run_validate(val);
    if (*select_cmd) return run_select(sel);
    if (*verify_cmd) return run_verify(ver);
    if (*oracle_cmd) return run_oracle(orc);
    if (*bench_cmd) return run_bench(bench);
    if (*render_cmd) return run_render(ren);
  } catch (const Failed& f) {
    return f.code;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << to_json(e.report());
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
