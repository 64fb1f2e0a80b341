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

#include "brooks/dfs_cases.hpp"

#include <algorithm>
#include <stdexcept>

#include "brooks/greedy.hpp"

namespace brooks {

namespace {

void color_min_missing(const Graph& g, Coloring& c, VertexId u, Color k, ColorScratch& scratch,
                       RunLog* log, const char* step) {
  scratch.mark_neighborhood(g, c, u, log ? &log->counters : nullptr);
  const Color col = scratch.first_missing(k);
  if (col == kUncolored) {
    throw InternalAssertion(step, "no free color at " + std::to_string(u),
                            log ? log->trace : std::vector<TraceEvent>{});
  }
  c.set(u, col);
}

std::vector<VertexId> iota_vertices(std::size_t n) {
  std::vector<VertexId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
  return all;
}

}  // namespace

StartTriple choose_v_x_y(const Graph& g, std::span<const VertexId> comp, Counters* counters) {
  NeighborMarks marks(g);
  for (VertexId v : comp) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      marks.mark(nbrs[i]);
      if (counters) counters->edges_examined += g.degree(nbrs[i]);
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!marks.adjacent_to_marked(nbrs[j])) return {v, nbrs[i], nbrs[j]};
      }
    }
  }
  throw InternalAssertion("choose_v_x_y", "every neighborhood is a clique (complete graph)");
}

std::optional<Branching> find_first_branching(const DfsTree& tree) {
  for (VertexId u : tree.order) {
    const auto kids = tree.children(u);
    if (kids.size() >= 2) return Branching{u, kids[0], kids[1]};
  }
  return std::nullopt;
}

Coloring case1_color_ham_path(const Graph& g, std::span<const VertexId> path, VertexId v,
                              VertexId x, VertexId y, Color k, RunLog* log) {
  const char* step = "case1_ham_path";
  if (path.size() < 4 || path[0] != x || path[1] != v || path[2] != y) {
    throw InternalAssertion(step, "path must start x, v, y and have another vertex");
  }
  VertexId z = kNoVertex;
  for (VertexId u : g.neighbors(v)) {
    if (u != x && u != y) {
      z = u;
      break;
    }
  }
  if (z == kNoVertex) throw InternalAssertion(step, "v has no third neighbor");
  const auto z_at = static_cast<std::size_t>(std::find(path.begin(), path.end(), z) - path.begin());
  if (z_at < 3 || z_at >= path.size()) throw InternalAssertion(step, "z is not after y on the path");
  if (log) {
    log->event(step, "x=" + std::to_string(x) + " y=" + std::to_string(y) + " <- 1, z=" +
                         std::to_string(z));
  }

  Coloring c(g.num_vertices(), k);
  c.set(x, 1);
  c.set(y, 1);
  ColorScratch scratch(k);
  for (std::size_t i = 3; i < z_at; ++i) color_min_missing(g, c, path[i], k, scratch, log, step);
  for (std::size_t i = path.size(); i-- > z_at;) {
    color_min_missing(g, c, path[i], k, scratch, log, step);
  }
  color_min_missing(g, c, v, k, scratch, log, step);
  return c;
}

Coloring case2a_split_color(const Graph& g, std::span<const VertexId> comp, VertexId cut,
                            Color k, RunLog* log) {
  const SeparationResult split = is_separation_vertex(g, comp, cut);
  if (!split.separates) {
    throw ColoringError(ColoringError::Kind::kNotSeparation,
                        "NotSeparation(" + std::to_string(cut) + ")", cut);
  }
  Coloring c(g.num_vertices(), k);
  Color cut_color = kUncolored;
  for (const auto& side : split.sides) {
    std::vector<VertexId> keep(side);
    keep.push_back(cut);
    if (log) {
      for (VertexId u : keep) log->counters.edges_examined += g.degree(u);
    }
    const InducedSubgraph sub = induced_subgraph(g, keep);
    const auto local_cut = static_cast<VertexId>(keep.size() - 1);
    if (sub.graph.degree(local_cut) >= k) {
      throw InternalAssertion("case2a_split", "cut vertex has full degree inside a side");
    }
    const Coloring local =
        greedy_post_order(sub.graph, iota_vertices(keep.size()), k, local_cut, {}, log);
    const Color here = local[local_cut];
    if (cut_color == kUncolored) cut_color = here;
    // Transposition here <-> cut_color aligns this side with the first one.
    const auto align = [&](Color col) {
      if (col == here) return cut_color;
      if (col == cut_color) return here;
      return col;
    };
    for (std::size_t i = 0; i < side.size(); ++i) c.set(side[i], align(local[i]));
    if (log) {
      log->event("case2a_split", "side of " + std::to_string(side.size()) +
                                     " vertices, cut colored " + std::to_string(here) +
                                     " -> " + std::to_string(cut_color));
    }
  }
  c.set(cut, cut_color);
  return c;
}

Coloring case2b_remove_pair_color(const Graph& g, std::span<const VertexId> comp, VertexId p,
                                  VertexId s, VertexId t, Color k, RunLog* log) {
  const char* step = "case2b_pair_removal";
  const auto trace = [&] { return log ? log->trace : std::vector<TraceEvent>{}; };
  if (g.adjacent(s, t)) {
    throw InternalAssertion(step, "AdjacentSiblings(" + std::to_string(s) + "," +
                                      std::to_string(t) + ")", trace());
  }
  Coloring c(g.num_vertices(), k);
  c.set(s, 1);
  c.set(t, 1);
  if (log) {
    log->event(step, "s=" + std::to_string(s) + " t=" + std::to_string(t) + " <- 1, root p=" +
                         std::to_string(p));
  }
  try {
    greedy_post_order_into(g, comp, k, p, c, log);
  } catch (const std::invalid_argument&) {
    throw InternalAssertion(step, "Disconnected: G - {s,t} is not connected", trace());
  } catch (const ColoringError& e) {
    throw InternalAssertion(step, e.what(), trace());
  }
  return c;
}

DfsCaseState plan_regular_dfs(const Graph& g, RunLog* log) {
  Counters* counters = log ? &log->counters : nullptr;
  const std::vector<VertexId> all = iota_vertices(g.num_vertices());
  DfsCaseState state;
  state.start = choose_v_x_y(g, all, counters);
  const auto [v, x, y] = state.start;
  const std::vector<VertexId> forced{x, v, y};
  state.tree = dfs(g, x, {.forced = forced, .allowed = nullptr, .counters = counters});
  if (state.tree.size() != g.num_vertices()) {
    throw InternalAssertion("forced_dfs", "graph is not connected");
  }
  if (log) {
    log->event("forced_dfs", "v=" + std::to_string(v) + " x=" + std::to_string(x) +
                                 " y=" + std::to_string(y));
  }

  state.branching = find_first_branching(state.tree);
  if (!state.branching) {
    state.case_tag = DfsCase::kHamPath;
    for (VertexId u : g.neighbors(v)) {
      if (u != x && u != y) {
        state.z = u;
        break;
      }
    }
    return state;
  }
  const auto [p, s, t] = *state.branching;
  if (log) {
    log->event("first_branching", "p=" + std::to_string(p) + " s=" + std::to_string(s) +
                                      " t=" + std::to_string(t));
  }
  if (p == state.tree.root) {
    // A DFS root with two children separates the graph.
    state.case_tag = DfsCase::kSplit;
    state.cut = p;
  } else if (state.tree.separates_below(s)) {
    state.case_tag = DfsCase::kSplit;
    state.cut = s;
  } else if (state.tree.separates_below(t)) {
    state.case_tag = DfsCase::kSplit;
    state.cut = t;
  } else {
    state.case_tag = DfsCase::kPairRemoval;
  }
  return state;
}

Coloring color_regular_dfs(const Graph& g, std::span<const VertexId> comp, RunLog& log) {
  if (comp.size() != g.num_vertices()) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const Coloring local =
        color_regular_dfs(sub.graph, iota_vertices(comp.size()), log);
    Coloring out(g.num_vertices(), local.k());
    for (std::size_t i = 0; i < comp.size(); ++i) out.set(sub.new_to_old[i], local[i]);
    return out;
  }

  const std::size_t n = g.num_vertices();
  const std::size_t delta = g.max_degree();
  if (delta < 3 || n <= delta + 1) {
    throw std::invalid_argument("color_regular_dfs needs a non-complete graph with Δ >= 3");
  }
  for (VertexId u = 0; u < n; ++u) {
    if (g.degree(u) != delta) throw std::invalid_argument("color_regular_dfs needs a regular graph");
  }
  const Color k = static_cast<Color>(delta);
  const std::vector<VertexId> all = iota_vertices(n);

  const DfsCaseState plan = plan_regular_dfs(g, &log);
  Coloring c;
  switch (plan.case_tag) {
    case DfsCase::kHamPath:
      log.hit(Branch::kHamPath);
      c = case1_color_ham_path(g, plan.tree.order, plan.start.v, plan.start.x, plan.start.y, k,
                               &log);
      break;
    case DfsCase::kSplit:
      log.hit(*plan.cut == plan.tree.root ? Branch::kSplitAtRoot : Branch::kSplit);
      log.event("case2a_split", "cut=" + std::to_string(*plan.cut));
      c = case2a_split_color(g, all, *plan.cut, k, &log);
      break;
    case DfsCase::kPairRemoval:
      log.hit(Branch::kPairRemoval);
      c = case2b_remove_pair_color(g, all, plan.branching->p, plan.branching->s,
                                   plan.branching->t, k, &log);
      break;
  }
  const auto result = validate_coloring(g, c, true);
  if (!result.ok()) {
    throw InternalAssertion("color_regular_dfs", "final coloring invalid: " + result.describe(),
                            log.trace);
  }
  return c;
}

}  // namespace brooks
