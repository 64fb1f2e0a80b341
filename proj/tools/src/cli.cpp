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

#include "brooks_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "brooks/rng.hpp"
#include "brooks/testkit/cases.hpp"
#include "brooks/testkit/generators.hpp"
#include "brooks/testkit/oracle.hpp"

namespace brooks::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitAlgorithm = 3;

// Thrown for unreadable inputs and bad flag values; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string infer_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return flag;
  for (const char* ext : {".el", ".edges", ".edgelist", ".txt"}) {
    const std::string e(ext);
    if (path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) {
      return "edgelist";
    }
  }
  return "dimacs";
}

Graph load_graph(const std::string& path, const std::string& format_flag, bool dedupe,
                 std::istream& in) {
  const std::string text = read_input(path, in);
  const BuildOptions options{.coalesce_duplicates = dedupe};
  if (infer_format(path, format_flag) == "edgelist") return parse_edge_list(text, options);
  return parse_dimacs(text, options);
}

std::string write_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? write_edge_list(g) : write_dimacs(g);
}

// --seed wins; otherwise BROOKS_SEED; otherwise `fallback`.
std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag,
                                          std::optional<std::uint64_t> fallback) {
  if (flag) return flag;
  if (const char* env = std::getenv("BROOKS_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw UsageError("BROOKS_SEED is not an integer");
    return value;
  }
  return fallback;
}

AlgoChoice algo_or_throw(const std::string& name) {
  const auto algo = parse_algo(name);
  if (!algo) throw UsageError("unknown algorithm '" + name + "'");
  return *algo;
}

void print_lines(const ColorResult& result, std::ostream& out) {
  out << "c palette " << result.palette << '\n';
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    const auto& comp = result.components[i];
    out << "c component " << i << " vertices " << comp.vertices.size() << " class "
        << to_string(comp.graph_class) << " colors_used " << comp.colors_used << " algorithm "
        << comp.algorithm << '\n';
  }
  if (result.fallbacks != 0) out << "c fallbacks " << result.fallbacks << '\n';
  out << coloring_to_lines(result.coloring);
}

void print_trace(const std::vector<TraceEvent>& trace, std::ostream& out) {
  for (const auto& e : trace) out << e.step << ": " << e.detail << '\n';
}

template <typename T>
T median_of(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return values[mid - 1] + (values[mid] - values[mid - 1]) / 2;
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  ColorOptions color_options;
  color_options.check_steps = false;
  for (std::size_t n : options.sizes) {
    std::vector<BenchRow> rows;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      Graph g;
      try {
        g = testkit::random_regular(n, options.delta, mix_seed(mix_seed(options.seed, n), r));
      } catch (const std::exception& e) {
        report.errors.push_back("n=" + std::to_string(n) + " repeat " + std::to_string(r) +
                                ": " + e.what());
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const ColorResult result = color_graph(g, options.algorithm, color_options);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.n = g.num_vertices();
      row.m = g.num_edges();
      row.delta = g.max_degree();
      row.algorithm = std::string(to_string(options.algorithm));
      row.wall_time_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      row.edges_examined = result.instrumentation.edges_examined;
      row.path_edge_examinations = result.instrumentation.path_edge_examinations;
      row.path_edges = result.instrumentation.path_edges;
      row.valid = validate_coloring(g, result.coloring, true).ok() &&
                  result.coloring.colors_used() <= std::max<std::size_t>(row.delta, 1);
      if (!row.valid) {
        throw AlgorithmFailure("bench produced an invalid coloring at n=" + std::to_string(n));
      }
      rows.push_back(row);
    }
    if (rows.empty()) continue;
    BenchRow med = rows.front();
    med.algorithm += "-median";
    std::vector<std::uint64_t> wall, edges, paths;
    for (const auto& row : rows) {
      wall.push_back(row.wall_time_ns);
      edges.push_back(row.edges_examined);
      paths.push_back(row.path_edge_examinations);
    }
    med.wall_time_ns = median_of(wall);
    med.edges_examined = median_of(edges);
    med.path_edge_examinations = median_of(paths);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    report.medians.push_back(med);
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << kBenchHeader << '\n';
  const auto emit = [&](const BenchRow& r) {
    out << r.n << ',' << r.m << ',' << r.delta << ',' << r.algorithm << ',' << r.wall_time_ns
        << ',' << r.edges_examined << ',' << r.path_edge_examinations << ','
        << (r.valid ? "true" : "false") << '\n';
  };
  std::size_t next = 0;
  for (const auto& med : report.medians) {
    while (next < report.rows.size() && report.rows[next].n == med.n) emit(report.rows[next++]);
    emit(med);
  }
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Δ-coloring of graphs with at most Δ colors (Brooks' theorem)", "brooks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format;
  std::string algorithm = "auto";
  bool trace = false;
  bool json = false;
  bool dedupe = false;
  std::optional<std::uint64_t> seed;

  auto* color = app.add_subcommand("color", "Color a graph and print the assignment");
  color->add_option("input", input, "Graph file, or - for standard input");
  color->add_option("--format", format, "Input format")->check(CLI::IsMember({"dimacs", "edgelist"}));
  color->add_option("--algorithm", algorithm, "a, b, greedy or auto");
  color->add_flag("--trace", trace, "Report algorithm steps");
  color->add_flag("--json", json, "Print the full result as JSON");
  color->add_option("--seed", seed, "Relabel vertices with this seed before coloring");
  color->add_flag("--dedupe", dedupe, "Merge repeated edges instead of rejecting them");

  auto* trace_cmd = app.add_subcommand("trace", "Print the step trace of a coloring run");
  trace_cmd->add_option("input", input, "Graph file, or - for standard input");
  trace_cmd->add_option("--format", format)->check(CLI::IsMember({"dimacs", "edgelist"}));
  trace_cmd->add_option("--algorithm", algorithm, "a, b, greedy or auto");
  trace_cmd->add_option("--seed", seed);
  trace_cmd->add_flag("--dedupe", dedupe);

  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", input, "Graph file")->required();
  verify->add_option("coloring", coloring_path, "Coloring: JSON or 's v c' lines")->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"dimacs", "edgelist"}));
  verify->add_flag("--dedupe", dedupe);

  std::string kind;
  std::string name;
  std::size_t gen_n = 0;
  std::size_t gen_d = 3;
  double gen_p = 0.5;
  std::string out_format = "dimacs";
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", kind, "gnp, regular, named, case or exhaustive")
      ->required()
      ->check(CLI::IsMember({"gnp", "regular", "named", "case", "exhaustive"}));
  gen->add_option("name", name, "Graph name (named) or branch name (case)");
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--d", gen_d, "Degree for regular graphs");
  gen->add_option("--p", gen_p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed);
  gen->add_option("--format", out_format)->check(CLI::IsMember({"dimacs", "edgelist"}));

  std::optional<std::uint64_t> budget;
  auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number (small graphs)");
  chromatic->add_option("input", input, "Graph file, or - for standard input");
  chromatic->add_option("--format", format)->check(CLI::IsMember({"dimacs", "edgelist"}));
  chromatic->add_option("--budget", budget, "Give up after this many search nodes");

  BenchOptions bench_options;
  std::vector<std::size_t> sizes;
  std::string bench_algorithm = "auto";
  auto* bench = app.add_subcommand("bench", "Time random regular graphs; CSV on stdout");
  bench->add_option("--delta", bench_options.delta, "Degree")->check(CLI::Range(1, 64));
  bench->add_option("--sizes", sizes, "Ascending vertex counts")->delimiter(',')->required();
  bench->add_option("--algorithm", bench_algorithm, "a, b, greedy or auto");
  bench->add_option("--seed", seed);
  bench->add_option("--repeats", bench_options.repeats)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*color || *trace_cmd) {
      const bool tracing = trace || *trace_cmd;
      const Graph g = load_graph(input, format, dedupe, in);
      ColorOptions options;
      options.trace = tracing;
      options.relabel_seed = resolve_seed(seed, std::nullopt);
      const ColorResult result = color_graph(g, algo_or_throw(algorithm), options);
      if (*trace_cmd) {
        print_trace(result.trace, out);
        out << "c palette " << result.palette << '\n';
      } else if (json) {
        out << to_json(result, tracing) << '\n';
      } else {
        if (tracing) print_trace(result.trace, err);
        print_lines(result, out);
      }
      return kExitOk;
    }

    if (*verify) {
      const Graph g = load_graph(input, format, dedupe, in);
      const Coloring c = parse_coloring(read_input(coloring_path, in), g.num_vertices());
      const ColoringCheck check = validate_coloring(g, c, true);
      if (check.ok()) {
        out << "ok\n";
        return kExitOk;
      }
      out << check.describe() << '\n';
      return kExitInvalid;
    }

    if (*gen) {
      const std::uint64_t s = *resolve_seed(seed, 1);
      if (kind == "exhaustive") {
        out << testkit::for_each_connected_graph(gen_n, [](const Graph&) {}) << '\n';
        return kExitOk;
      }
      Graph g;
      if (kind == "gnp") {
        g = testkit::gnp(gen_n, gen_p, s);
      } else if (kind == "regular") {
        g = testkit::random_regular(gen_n, gen_d, s);
      } else if (kind == "named") {
        g = testkit::named_graph(name);
      } else {
        g = testkit::generate_case_instance(std::string_view(name), s).graph;
      }
      out << write_graph(g, out_format);
      return kExitOk;
    }

    if (*chromatic) {
      const Graph g = load_graph(input, format, false, in);
      testkit::OracleOptions options;
      options.node_budget = budget;
      out << testkit::chromatic_number(g, options) << '\n';
      return kExitOk;
    }

    if (*bench) {
      if (!std::is_sorted(sizes.begin(), sizes.end())) throw UsageError("--sizes must ascend");
      bench_options.sizes = sizes;
      bench_options.algorithm = algo_or_throw(bench_algorithm);
      bench_options.seed = *resolve_seed(seed, 1);
      const BenchReport report = run_bench(bench_options);
      for (const auto& e : report.errors) err << "generation failed: " << e << '\n';
      out << bench_csv(report);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GraphError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ColoringError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const testkit::UnknownName& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AlgorithmFailure& e) {
    err << "algorithm failure: " << e.what() << '\n';
    for (const auto& reason : e.reasons()) err << "  " << reason << '\n';
    return kExitAlgorithm;
  } catch (const testkit::BudgetExceeded& e) {
    err << "search stopped: " << e.what() << '\n';
    return kExitAlgorithm;
  } catch (const testkit::SearchExhausted& e) {
    err << "search stopped: " << e.what() << '\n';
    return kExitAlgorithm;
  } catch (const testkit::GenRetryExhausted& e) {
    err << "search stopped: " << e.what() << '\n';
    return kExitAlgorithm;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace brooks::cli
