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

#include "brooks/dispatch.hpp"

#include <algorithm>
#include <numeric>

#include "brooks/dfs_cases.hpp"
#include "brooks/greedy.hpp"
#include "brooks/repair.hpp"
#include "brooks/rng.hpp"

namespace brooks {

namespace {

struct ComponentRun {
  std::vector<Color> colors;  // indexed like the component's local graph
  std::string algorithm;
};

// Two-coloring by BFS parity; valid for paths and even cycles.
std::vector<Color> color_bipartite(const Graph& local) {
  std::vector<Color> colors(local.num_vertices(), kUncolored);
  std::vector<VertexId> queue{0};
  colors[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : local.neighbors(u)) {
      if (colors[w] == kUncolored) {
        colors[w] = colors[u] == 1 ? 2 : 1;
        queue.push_back(w);
      }
    }
  }
  return colors;
}

// Alternate 1, 2 around the cycle from vertex 0; the last vertex gets 3.
std::vector<Color> color_odd_cycle(const Graph& local) {
  const std::size_t n = local.num_vertices();
  std::vector<Color> colors(n, kUncolored);
  VertexId prev = kNoVertex;
  VertexId cur = 0;
  for (std::size_t i = 0; i < n; ++i) {
    colors[cur] = (i + 1 == n) ? 3 : (i % 2 == 0 ? 1 : 2);
    const auto nbrs = local.neighbors(cur);
    const VertexId next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
  }
  return colors;
}

std::vector<VertexId> all_vertices(std::size_t n) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

std::vector<Color> run_regular(const Graph& local, AlgoChoice which, RunLog& log) {
  const auto all = all_vertices(local.num_vertices());
  const Coloring c = which == AlgoChoice::kA ? color_regular_repair(local, all, log)
                                             : color_regular_dfs(local, all, log);
  return {c.colors().begin(), c.colors().end()};
}

ColorResult color_graph_direct(const Graph& g, AlgoChoice algo, const ColorOptions& options) {
  ColorResult result;
  const auto components = connected_components(g);
  std::vector<ComponentClassInfo> infos;
  std::vector<ComponentRun> runs;
  infos.reserve(components.size());
  runs.reserve(components.size());

  for (const auto& comp : components) {
    // A component spanning the whole graph is used in place.
    std::optional<InducedSubgraph> sub;
    if (comp.size() != g.num_vertices()) sub = induced_subgraph(g, comp);
    const Graph& local = sub ? sub->graph : g;

    const auto local_all = all_vertices(local.num_vertices());
    const GraphClass cls = classify_component(local, local_all);
    const std::size_t delta = local.max_degree();
    infos.push_back({cls, comp.size(), delta});

    ComponentRun run;
    switch (cls) {
      case GraphClass::kTrivialOrSmallDelta:
        run.colors.assign(local.num_vertices(), 1);
        run.algorithm = "direct";
        break;
      case GraphClass::kComplete:
        run.colors.resize(local.num_vertices());
        std::iota(run.colors.begin(), run.colors.end(), Color{1});
        run.algorithm = "direct";
        break;
      case GraphClass::kPath:
      case GraphClass::kEvenCycle:
        run.colors = color_bipartite(local);
        run.algorithm = "direct";
        break;
      case GraphClass::kOddCycle:
        run.colors = color_odd_cycle(local);
        run.algorithm = "direct";
        break;
      case GraphClass::kHasLowDegreeVertex: {
        RunLog log;
        log.tracing = options.trace;
        log.check_steps = options.check_steps;
        const Coloring c = color_low_degree_component(local, local_all, static_cast<Color>(delta),
                                                      &log);
        run.colors.assign(c.colors().begin(), c.colors().end());
        run.algorithm = "greedy";
        result.instrumentation += log.counters;
        for (auto& e : log.trace) result.trace.push_back(std::move(e));
        break;
      }
      case GraphClass::kDeltaRegularNonComplete: {
        if (algo == AlgoChoice::kGreedy) {
          throw AlgorithmFailure("greedy cannot color the Δ-regular component containing vertex " +
                                 std::to_string(comp.front()));
        }
        const AlgoChoice first = algo == AlgoChoice::kA ? AlgoChoice::kA : AlgoChoice::kB;
        const AlgoChoice second = first == AlgoChoice::kA ? AlgoChoice::kB : AlgoChoice::kA;
        std::vector<std::string> reasons;
        for (AlgoChoice which : {first, second}) {
          RunLog log;
          log.tracing = options.trace;
          log.check_steps = options.check_steps;
          try {
            run.colors = run_regular(local, which, log);
            run.algorithm = std::string(to_string(which));
          } catch (const InternalAssertion& e) {
            reasons.push_back(std::string(to_string(which)) + ": " + e.what());
          } catch (const ColoringError& e) {
            reasons.push_back(std::string(to_string(which)) + ": " + e.what());
          }
          result.instrumentation += log.counters;
          result.branches.insert(result.branches.end(), log.branches.begin(), log.branches.end());
          for (auto& e : log.trace) result.trace.push_back(std::move(e));
          if (!run.algorithm.empty()) break;
          ++result.fallbacks;
          result.fallback_reasons.push_back(reasons.back());
          if (!options.allow_fallback) break;
        }
        if (run.algorithm.empty()) {
          throw AlgorithmFailure("no algorithm colored the component containing vertex " +
                                     std::to_string(comp.front()),
                                 reasons);
        }
        break;
      }
    }
    runs.push_back(std::move(run));
  }

  result.palette = required_palette(infos);
  result.coloring = Coloring(g.num_vertices(), result.palette);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    for (std::size_t j = 0; j < comp.size(); ++j) result.coloring.set(comp[j], runs[i].colors[j]);
    ComponentReport report;
    report.vertices = comp;
    report.graph_class = infos[i].graph_class;
    report.max_degree = infos[i].max_degree;
    report.colors_used = result.coloring.colors_used(comp);
    report.algorithm = std::move(runs[i].algorithm);
    result.components.push_back(std::move(report));
  }

  const auto check = validate_coloring(g, result.coloring, true);
  if (!check.ok()) throw AlgorithmFailure("assembled coloring invalid: " + check.describe());
  return result;
}

}  // namespace

std::string_view to_string(AlgoChoice algo) {
  switch (algo) {
    case AlgoChoice::kA: return "a";
    case AlgoChoice::kB: return "b";
    case AlgoChoice::kGreedy: return "greedy";
    case AlgoChoice::kAuto: return "auto";
  }
  return "auto";
}

std::optional<AlgoChoice> parse_algo(std::string_view name) {
  if (name == "a") return AlgoChoice::kA;
  if (name == "b") return AlgoChoice::kB;
  if (name == "greedy") return AlgoChoice::kGreedy;
  if (name == "auto") return AlgoChoice::kAuto;
  return std::nullopt;
}

Color required_palette(std::span<const ComponentClassInfo> classes) {
  std::size_t palette = 0;
  for (const auto& info : classes) {
    std::size_t need = 0;
    switch (info.graph_class) {
      case GraphClass::kComplete: need = info.size; break;
      case GraphClass::kOddCycle: need = 3; break;
      case GraphClass::kEvenCycle:
      case GraphClass::kPath: need = info.size >= 2 ? 2 : 1; break;
      case GraphClass::kTrivialOrSmallDelta: need = info.size == 0 ? 0 : 1; break;
      case GraphClass::kHasLowDegreeVertex:
      case GraphClass::kDeltaRegularNonComplete: need = info.max_degree; break;
    }
    palette = std::max(palette, need);
  }
  return static_cast<Color>(palette);
}

ColorResult color_graph(const Graph& g, AlgoChoice algo, const ColorOptions& options) {
  if (!options.relabel_seed) return color_graph_direct(g, algo, options);

  const std::size_t n = g.num_vertices();
  std::vector<VertexId> perm = all_vertices(n);
  Rng rng(*options.relabel_seed);
  rng.shuffle(std::span<VertexId>(perm));
  EdgeList edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  const Graph relabeled = Graph::build(n, edges);

  ColorResult inner = color_graph_direct(relabeled, algo, options);
  ColorResult result = inner;
  result.coloring = Coloring(n, inner.palette);
  for (VertexId v = 0; v < n; ++v) result.coloring.set(v, inner.coloring[perm[v]]);
  std::vector<VertexId> inverse(n);
  for (VertexId v = 0; v < n; ++v) inverse[perm[v]] = v;
  for (auto& report : result.components) {
    for (auto& v : report.vertices) v = inverse[v];
    std::sort(report.vertices.begin(), report.vertices.end());
  }
  std::sort(result.components.begin(), result.components.end(),
            [](const auto& a, const auto& b) { return a.vertices.front() < b.vertices.front(); });
  result.trace.insert(result.trace.begin(),
                      {"relabel", "seed " + std::to_string(*options.relabel_seed) +
                                      "; trace vertex ids are relabeled"});
  const auto check = validate_coloring(g, result.coloring, true);
  if (!check.ok()) throw AlgorithmFailure("relabeled coloring invalid: " + check.describe());
  return result;
}

}  // namespace brooks
