// Copyright 2026 The Brooks Coloring Authors.
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

// Acceptance checks AC1-AC8. With no arguments every criterion runs; pass
// names (e.g. "AC3") to run a subset. One PASS/FAIL line per criterion; the
// exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brooks/dispatch.hpp"
#include "brooks/repair.hpp"
#include "brooks/testkit/cases.hpp"
#include "brooks/testkit/generators.hpp"
#include "brooks/testkit/oracle.hpp"
#include "brooks_tools/cli.hpp"
#include "support/brute.hpp"

namespace {

using namespace brooks;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<VertexId> all_of(const Graph& g) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

ColorOptions strict_options() {
  ColorOptions o;
  o.allow_fallback = false;
  o.check_steps = false;
  return o;
}

// Per-component bound: Complete uses c colors, OddCycle 3, everything else at
// most its own Δ (at least 1 color for a vertex).
std::string bound_violation(const ColorResult& r) {
  for (const auto& comp : r.components) {
    const std::size_t n = comp.vertices.size();
    if (comp.graph_class == GraphClass::kComplete) {
      if (comp.colors_used != n) return "complete component uses " + std::to_string(comp.colors_used);
    } else if (comp.graph_class == GraphClass::kOddCycle) {
      if (comp.colors_used != 3) return "odd cycle uses " + std::to_string(comp.colors_used);
    } else if (comp.colors_used > std::max<std::size_t>(comp.max_degree, 1)) {
      return "component uses " + std::to_string(comp.colors_used) + " > Δ=" +
             std::to_string(comp.max_degree);
    }
  }
  return {};
}

struct CorpusTally {
  std::uint64_t runs = 0;
  std::uint64_t invalid = 0;
  std::uint64_t over_bound = 0;
  std::uint64_t assertions = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t other_errors = 0;
  std::string first_problem;

  void note(const std::string& what) {
    if (first_problem.empty()) first_problem = what;
  }

  // a and b run without fallback so any assertion surfaces; auto runs with
  // the default policy and must never need its fallback.
  void run_all(const Graph& g, const std::string& label) {
    for (AlgoChoice algo : {AlgoChoice::kA, AlgoChoice::kB, AlgoChoice::kAuto}) {
      ++runs;
      ColorOptions o = strict_options();
      if (algo == AlgoChoice::kAuto) o.allow_fallback = true;
      try {
        const ColorResult r = color_graph(g, algo, o);
        if (!validate_coloring(g, r.coloring, true).ok()) {
          ++invalid;
          note(label + " invalid with " + std::string(to_string(algo)));
        }
        if (const auto bad = bound_violation(r); !bad.empty()) {
          ++over_bound;
          note(label + " " + std::string(to_string(algo)) + ": " + bad);
        }
        fallbacks += r.fallbacks;
        if (r.fallbacks) note(label + " auto fell back: " + r.fallback_reasons.front());
      } catch (const AlgorithmFailure& e) {
        ++assertions;
        note(label + " " + std::string(to_string(algo)) + ": " +
             (e.reasons().empty() ? e.what() : e.reasons().front()));
      } catch (const std::exception& e) {
        ++other_errors;
        note(label + " " + std::string(to_string(algo)) + ": " + e.what());
      }
    }
  }

  bool clean() const {
    return invalid == 0 && over_bound == 0 && assertions == 0 && fallbacks == 0 &&
           other_errors == 0;
  }

  std::string summary() const {
    std::ostringstream s;
    s << runs << " runs, invalid=" << invalid << " over_bound=" << over_bound
      << " assertions=" << assertions << " fallbacks=" << fallbacks
      << " errors=" << other_errors;
    if (!first_problem.empty()) s << "; first: " << first_problem;
    return s.str();
  }
};

Outcome ac1() {
  CorpusTally tally;
  std::uint64_t graphs = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_failed = 0;
  bool counts_ok = true;
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t count = testkit::for_each_connected_graph(n, [&](const Graph& g) {
      ++graphs;
      tally.run_all(g, "n=" + std::to_string(n) + " m=" + std::to_string(g.num_edges()));
      // Exclusions decided from first principles: complete (K1 included)
      // or a connected 2-regular graph of odd order.
      const std::size_t m = g.num_edges();
      const bool complete = m == n * (n - 1) / 2;
      const bool odd_cycle = n % 2 == 1 && n >= 3 && m == n && g.max_degree() == 2;
      if (!complete && !odd_cycle) {
        ++oracle_checked;
        if (!testkit::k_colorable(g, static_cast<Color>(g.max_degree()))) ++oracle_failed;
      }
    });
    const std::uint64_t expect = brute::connected_labeled_count(n);
    counts_ok = counts_ok && count == expect;
    counts << (n > 1 ? "," : "") << count;
  }
  Outcome out;
  out.pass = counts_ok && tally.clean() && oracle_failed == 0 &&
             brute::connected_labeled_count(6) == 26704;
  out.detail = std::to_string(graphs) + " graphs (counts " + counts.str() + "), " +
               tally.summary() + ", oracle Δ-colorable " +
               std::to_string(oracle_checked - oracle_failed) + "/" +
               std::to_string(oracle_checked);
  return out;
}

Outcome ac2() {
  CorpusTally regular;
  std::uint64_t regular_graphs = 0;
  for (std::size_t d = 3; d <= 6; ++d) {
    Rng rng(mix_seed(0xAC2, d));
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = d + 2 + rng.below(256 - d - 1);
      if (n * d % 2) n = n == 256 ? n - 1 : n + 1;
      const std::uint64_t seed = rng.next();
      const Graph g = testkit::random_regular(n, d, seed);
      ++regular_graphs;
      regular.run_all(g, "regular(" + std::to_string(n) + "," + std::to_string(d) + "," +
                             std::to_string(seed) + ")");
    }
  }
  CorpusTally random;
  const double ps[] = {0.2, 0.5, 0.8};
  Rng rng(0xAC2);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng.below(64);
    const double p = ps[i % 3];
    const std::uint64_t seed = rng.next();
    random.run_all(testkit::gnp(n, p, seed), "gnp(" + std::to_string(n) + "," +
                                                 std::to_string(p) + "," + std::to_string(seed) +
                                                 ")");
  }
  Outcome out;
  out.pass = regular.clean() && random.clean();
  out.detail = "regular " + std::to_string(regular_graphs) + " graphs: " + regular.summary() +
               " | gnp 10000 graphs: " + random.summary();
  return out;
}

Outcome ac3() {
  Outcome out;
  std::vector<std::string> hit;
  std::vector<std::string> missed;
  for (Branch b : testkit::case_branches()) {
    const std::string name(to_string(b));
    try {
      const auto inst = testkit::generate_case_instance(b, 1);
      const auto replay = testkit::replay_branches(inst.graph, testkit::is_repair_branch(b));
      const bool seen = std::find(replay.begin(), replay.end(), b) != replay.end() ||
                        (b == Branch::kSplit &&
                         std::find(replay.begin(), replay.end(), Branch::kSplitAtRoot) !=
                             replay.end());
      if (seen) {
        hit.push_back(name + "(n=" + std::to_string(inst.graph.num_vertices()) + ")");
      } else {
        missed.push_back(name + " (replay did not reach it)");
      }
    } catch (const std::exception& e) {
      missed.push_back(name + " (" + e.what() + ")");
    }
  }
  out.pass = missed.empty();
  std::ostringstream s;
  s << hit.size() << "/" << testkit::case_branches().size() << " branches hit";
  for (const auto& h : hit) s << " " << h;
  if (!missed.empty()) {
    s << "; missed:";
    for (const auto& m : missed) s << " " << m;
  }
  out.detail = s.str();
  return out;
}

Outcome ac4() {
  Outcome out;
  std::ostringstream s;
  for (AlgoChoice algo : {AlgoChoice::kB, AlgoChoice::kA}) {
    cli::BenchOptions options;
    options.delta = 3;
    options.algorithm = algo;
    options.seed = 1;
    options.repeats = 11;
    for (int i = 0; i < 8; ++i) options.sizes.push_back(10000u << i);
    const cli::BenchReport report = cli::run_bench(options);
    if (!report.errors.empty() || report.medians.size() != 8) {
      out.pass = false;
      s << to_string(algo) << ": bench errors " << report.errors.size() << "; ";
      continue;
    }
    double lo = 1e300, hi = 0;
    for (const auto& row : report.medians) {
      const double per = static_cast<double>(row.edges_examined) / static_cast<double>(row.n + row.m);
      lo = std::min(lo, per);
      hi = std::max(hi, per);
    }
    const bool work_ok = hi / lo < 2.0;
    bool time_ok = true;
    s << to_string(algo) << ": edges/(n+m) in [" << lo << ", " << hi << "]"
      << (work_ok ? "" : " (spread >= 2x)") << ", time ratios";
    for (std::size_t i = 1; i < report.medians.size(); ++i) {
      const double ratio = static_cast<double>(report.medians[i].wall_time_ns) /
                           static_cast<double>(report.medians[i - 1].wall_time_ns);
      const bool ok = ratio >= 1.5 && ratio <= 3.0;
      time_ok = time_ok && ok;
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.2f%s", ratio, ok ? "" : "!");
      s << buf;
    }
    out.pass = out.pass && work_ok && time_ok;
    s << "; ";
  }

  const Graph big = testkit::random_regular(1000000, 3, 1);
  ColorOptions o;
  o.check_steps = false;
  const auto start = Clock::now();
  const ColorResult r = color_graph(big, AlgoChoice::kAuto, o);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool valid = validate_coloring(big, r.coloring, true).ok();
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=10^6 colored in %.3f s (%s)", secs, valid ? "valid" : "INVALID");
  s << buf;
  out.pass = out.pass && valid && secs < 10.0;
  out.detail = s.str();
  return out;
}

Outcome ac5() {
  std::uint64_t post = 0;
  std::uint64_t violations = 0;
  std::uint64_t asserted = 0;
  std::string first;
  const auto check = [&](const Graph& g, const std::string& label) {
    RunLog log;
    log.check_steps = false;
    try {
      color_regular_repair(g, all_of(g), log);
    } catch (const InternalAssertion&) {
      ++asserted;
    }
    if (!log.reached(Branch::kPostNormalization)) return;
    ++post;
    if (log.counters.path_edge_examinations > 2 * log.counters.path_edges) {
      ++violations;
      if (first.empty()) {
        first = label + ": " + std::to_string(log.counters.path_edge_examinations) + " > 2*" +
                std::to_string(log.counters.path_edges);
      }
    }
  };
  Rng rng(0xAC5);
  for (int i = 0; i < 60000; ++i) {
    const std::size_t d = 3 + rng.below(4);
    std::size_t n = d + 2 + rng.below(60);
    if (n * d % 2) ++n;
    const std::uint64_t seed = rng.next();
    const Graph g = testkit::random_regular(n, d, seed);
    if (connected_components(g).size() != 1) continue;
    check(g, "regular(" + std::to_string(n) + "," + std::to_string(d) + "," +
                 std::to_string(seed) + ")");
  }
  for (Branch b : testkit::case_branches()) {
    if (!testkit::is_repair_branch(b)) continue;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      try {
        check(testkit::generate_case_instance(b, seed).graph, std::string(to_string(b)));
      } catch (const testkit::SearchExhausted&) {
        break;
      }
    }
  }
  Outcome out;
  out.pass = post > 0 && violations == 0;
  out.detail = std::to_string(post) + " runs reached post-normalization (" +
               std::to_string(asserted) + " of all runs asserted later), violations=" +
               std::to_string(violations) + (first.empty() ? "" : "; first: " + first);
  return out;
}

Outcome ac6() {
  std::uint64_t bad_involution = 0, bad_validity = 0, bad_members = 0;
  Rng rng(0xAC6);
  for (int i = 0; i < 10000; ++i) {
    const Graph g = testkit::gnp(2 + rng.below(39), 0.05 + 0.6 * rng.unit(), rng.next());
    const auto colors = brute::random_proper_coloring(g, rng);
    const Color k = std::max<Color>(2, *std::max_element(colors.begin(), colors.end()));
    Coloring c(k, colors);
    const VertexId s = static_cast<VertexId>(rng.below(g.num_vertices()));
    Color b = 1 + static_cast<Color>(rng.below(k - 1));
    if (b >= colors[s]) ++b;
    const auto comp = kempe_component(g, c, s, colors[s], b);
    const std::set<VertexId> got(comp.members.begin(), comp.members.end());
    if (got != brute::two_color_component(g, colors, s, colors[s], b)) ++bad_members;
    kempe_swap(g, c, comp);
    if (!validate_coloring(g, c, true).ok()) ++bad_validity;
    kempe_swap(g, c, comp);
    if (brute::colors_of(c) != colors) ++bad_involution;
  }

  std::uint64_t graphs = 0, comparisons = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    Rng pick(mix_seed(0xAC6, n));
    brute::for_each_labeled_graph(n, [&](const Graph& g) {
      ++graphs;
      const auto colors = brute::random_proper_coloring(g, pick);
      const Color k = std::max<Color>(2, *std::max_element(colors.begin(), colors.end()));
      const Coloring c(k, colors);
      for (VertexId s = 0; s < n; ++s) {
        for (Color b = 1; b <= k; ++b) {
          if (b == colors[s]) continue;
          ++comparisons;
          const auto comp = kempe_component(g, c, s, colors[s], b);
          const std::set<VertexId> got(comp.members.begin(), comp.members.end());
          if (got.size() != comp.members.size() ||
              got != brute::two_color_component(g, colors, s, colors[s], b)) {
            ++mismatches;
          }
        }
      }
    });
  }
  Outcome out;
  out.pass = bad_involution == 0 && bad_validity == 0 && bad_members == 0 && mismatches == 0;
  out.detail = "10000 random triples: involution failures=" + std::to_string(bad_involution) +
               " validity failures=" + std::to_string(bad_validity) +
               " member mismatches=" + std::to_string(bad_members) + "; exhaustive n<=7: " +
               std::to_string(graphs) + " graphs, " + std::to_string(comparisons) +
               " components, mismatches=" + std::to_string(mismatches);
  return out;
}

Outcome ac7() {
  const std::pair<const char*, Color> anchors[] = {
      {"petersen", 3}, {"k5", 5}, {"c7", 3}, {"k33", 2}, {"prism", 3}};
  Outcome out;
  std::ostringstream s;
  for (const auto& [name, expect] : anchors) {
    const Graph g = testkit::named_graph(name);
    const Color oracle = testkit::chromatic_number(g);
    const Color enumerated = brute::chromatic(g);
    const bool ok = oracle == expect && enumerated == expect;
    out.pass = out.pass && ok;
    s << name << "=" << oracle << "/" << enumerated << (ok ? "" : "(expected " + std::to_string(expect) + ")")
      << " ";
  }
  out.detail = "oracle/enumeration: " + s.str();
  return out;
}

Outcome ac8() {
  std::vector<Graph> corpus;
  for (std::size_t n = 1; n <= 6; ++n) {
    brute::for_each_labeled_graph(n, [&](const Graph& g) { corpus.push_back(g); });
  }
  Rng rng(0xAC8);
  for (int i = 0; i < 500; ++i) corpus.push_back(testkit::gnp(1 + rng.below(64), rng.unit(), rng.next()));
  for (std::size_t d = 3; d <= 6; ++d) {
    for (int i = 0; i < 50; ++i) corpus.push_back(testkit::random_regular(60 + 2 * i, d, rng.next()));
  }
  for (const char* name : {"petersen", "prism", "bowtie", "k33", "k5", "c7"}) {
    corpus.push_back(testkit::named_graph(name));
  }

  std::uint64_t roundtrip_failures = 0, json_failures = 0, json_runs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const std::string text = write_dimacs(g);
    const Graph back = parse_dimacs(text);
    if (!(back == g) || write_dimacs(back) != text) ++roundtrip_failures;
    if (parse_edge_list(write_edge_list(g)) != g) ++roundtrip_failures;

    if (i % 7 != 0 && g.num_vertices() <= 6) continue;  // JSON on a sample of the tiny graphs
    ColorOptions o;
    o.trace = true;
    if (i % 2) o.relabel_seed = i;
    for (AlgoChoice algo : {AlgoChoice::kA, AlgoChoice::kB, AlgoChoice::kAuto}) {
      ++json_runs;
      const std::string first = to_json(color_graph(g, algo, o), true);
      const std::string second = to_json(color_graph(g, algo, o), true);
      if (first != second) ++json_failures;
    }
  }
  Outcome out;
  out.pass = roundtrip_failures == 0 && json_failures == 0;
  out.detail = std::to_string(corpus.size()) + " graphs round-tripped, failures=" +
               std::to_string(roundtrip_failures) + "; " + std::to_string(json_runs) +
               " JSON runs repeated, differences=" + std::to_string(json_failures);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!wanted.empty() && !wanted.contains(name)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << name << " " << (o.pass ? "PASS" : "FAIL") << " [" << t << "] " << o.detail
              << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
