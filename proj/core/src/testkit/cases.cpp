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

#include "brooks/testkit/cases.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "brooks/dfs_cases.hpp"
#include "brooks/repair.hpp"
#include "brooks/rng.hpp"
#include "brooks/testkit/generators.hpp"

namespace brooks::testkit {

namespace {

bool connected(const Graph& g) { return connected_components(g).size() == 1; }

// Two cubic graphs, each with one edge subdivided, joined by a bridge
// between the subdivision vertices.
Graph bridged_cubic(Rng& rng) {
  const std::size_t sizes[] = {4, 6, 8};
  const std::size_t n1 = sizes[rng.below(3)];
  const std::size_t n2 = sizes[rng.below(3)];
  EdgeList edges;
  VertexId base = 0;
  std::vector<VertexId> mids;
  for (std::size_t part : {n1, n2}) {
    const Graph h = random_regular(part, 3, rng.next());
    const auto hedges = h.edges();
    const std::size_t cut = rng.below(hedges.size());
    const auto mid = static_cast<VertexId>(n1 + n2 + mids.size());
    for (std::size_t i = 0; i < hedges.size(); ++i) {
      const VertexId a = hedges[i].first + base;
      const VertexId b = hedges[i].second + base;
      if (i == cut) {
        edges.emplace_back(a, mid);
        edges.emplace_back(b, mid);
      } else {
        edges.emplace_back(a, b);
      }
    }
    mids.push_back(mid);
    base += static_cast<VertexId>(part);
  }
  edges.emplace_back(mids[0], mids[1]);
  return relabel(Graph::build(n1 + n2 + 2, edges), rng.next());
}

Graph random_candidate(Rng& rng, std::size_t d_lo, std::size_t d_hi) {
  const std::size_t d = d_lo + rng.below(d_hi - d_lo + 1);
  std::size_t n = d + 2 + rng.below(10);
  if ((n * d) % 2 != 0) ++n;
  return random_regular(n, d, rng.next());
}

bool hit(const RunLog& log, Branch target) {
  if (log.reached(target)) return true;
  return target == Branch::kSplit && log.reached(Branch::kSplitAtRoot);
}

// How far the repair chain gets on g, and whether it reaches `target`. The
// score grows with progress towards the final maneuver: colors seen around v,
// saturated neighbors, normalized paths, then the share of path vertices that
// already see their third color.
struct Probe {
  double score = 0;
  bool reached = false;
};

Probe probe_repair(const Graph& g, Branch target) {
  Probe out;
  if (!connected(g)) return out;
  const std::size_t d = g.max_degree();
  const VertexId v = 0;
  RunLog log;
  log.check_steps = false;
  try {
    Coloring start = initial_repair_coloring(g, v, log);
    std::set<Color> around_v;
    std::size_t saturated = 0;
    for (VertexId u : g.neighbors(v)) {
      around_v.insert(start[u]);
      std::set<Color> seen;
      for (VertexId w : g.neighbors(u)) {
        if (start[w] != kUncolored) seen.insert(start[w]);
      }
      if (seen.size() == d - 1 && !seen.contains(start[u])) ++saturated;
    }
    out.score = static_cast<double>(around_v.size() + saturated);

    KempeRepair repair(g, std::move(start), v, log);
    const auto finish = [&] {
      out.reached = hit(log, target);
      return out;
    };
    if (repair.step_free_color() == StepOutcome::kDone) return finish();
    out.score = static_cast<double>(2 * d + 1);
    repair.step_choose_roles();
    for (RolePair pair : {RolePair::k13, RolePair::k23, RolePair::k12}) {
      if (repair.step_normalize_pair(pair) == StepOutcome::kDone) return finish();
      out.score += 1;
    }

    const RepairState& st = repair.state();
    const Coloring& c = repair.coloring();
    constexpr int third[3] = {2, 1, 0};
    std::size_t total = 0;
    std::size_t seeing = 0;
    for (int p = 0; p < 3; ++p) {
      const Color want = st.role_color[third[p]];
      for (VertexId u : st.paths[p]->members) {
        ++total;
        for (VertexId w : g.neighbors(u)) {
          if (c[w] == want) {
            ++seeing;
            break;
          }
        }
      }
    }
    out.score += 2.0 * static_cast<double>(seeing) / static_cast<double>(total);
    const auto [v1, v2, v3] = st.role_vertex;
    if (target == Branch::kFinalEdgeAbsent) {
      out.score += 0.5 * static_cast<double>(!g.adjacent(v1, v2) + !g.adjacent(v2, v3) +
                                             !g.adjacent(v1, v3));
      // Each P23 vertex that sees color 1 twice steers the run into (i).
      const auto& p23 = st.paths[static_cast<int>(RolePair::k23)]->members;
      std::size_t doubles = 0;
      for (VertexId u : p23) {
        std::size_t ones = 0;
        for (VertexId w : g.neighbors(u)) ones += c[w] == st.role_color[0];
        doubles += ones >= 2;
      }
      out.score += 1.0 - static_cast<double>(doubles) / static_cast<double>(p23.size());
    }
    if (target == Branch::kFinalEdgePresent && g.adjacent(v1, v2)) out.score += 0.5;
    if (target == Branch::kFinalDoubleColorSplit) {
      for (VertexId u : st.paths[static_cast<int>(RolePair::k23)]->members) {
        std::size_t ones = 0;
        for (VertexId w : g.neighbors(u)) ones += c[w] == st.role_color[0];
        if (ones >= 2) {
          out.score += 0.5;
          break;
        }
      }
    }
    repair.run_from_third_color_break();
    return finish();
  } catch (const InternalAssertion&) {
    out.reached = false;
    return out;
  }
}

// Degree-preserving edge switch or a swap of two labels.
Graph mutate(const Graph& g, Rng& rng) {
  const std::size_t n = g.num_vertices();
  EdgeList edges = g.edges();
  if (rng.coin(0.3)) {
    const auto a = static_cast<VertexId>(rng.below(n));
    const auto b = static_cast<VertexId>(rng.below(n));
    for (auto& [x, y] : edges) {
      const auto swap_label = [&](VertexId& z) { z = z == a ? b : (z == b ? a : z); };
      swap_label(x);
      swap_label(y);
    }
    return Graph::build(n, edges);
  }
  for (int tries = 0; tries < 32; ++tries) {
    const std::size_t i = rng.below(edges.size());
    const std::size_t j = rng.below(edges.size());
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (rng.coin(0.5)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (g.adjacent(a, d) || g.adjacent(c, b)) continue;
    edges[i] = {a, d};
    edges[j] = {c, b};
    return Graph::build(n, edges);
  }
  return g;
}

CaseInstance search_repair(Branch target, std::uint64_t seed) {
  // Cubic graphs cannot reach branches that need a path vertex with two
  // neighbors outside its path.
  const bool cubic_ok =
      target != Branch::kThirdColorBreak && target != Branch::kFinalDoubleColorSplit;
  constexpr std::uint64_t kWalk = 4000;
  constexpr double kTemperature = 0.25;
  std::uint64_t attempts = 0;
  for (std::uint64_t restart = 0; attempts < kCaseAttemptBudget; ++restart) {
    Rng rng(mix_seed(seed, restart));
    Graph g;
    try {
      g = random_candidate(rng, cubic_ok ? 3 : 4, 5);
    } catch (const GenRetryExhausted&) {
      continue;
    }
    Probe cur = probe_repair(g, target);
    ++attempts;
    for (std::uint64_t step = 0; step < kWalk && attempts < kCaseAttemptBudget; ++step) {
      if (cur.reached) return {std::move(g), attempts};
      Graph next = mutate(g, rng);
      const Probe p = probe_repair(next, target);
      ++attempts;
      if (p.reached || p.score >= cur.score ||
          rng.unit() < std::exp((p.score - cur.score) / kTemperature)) {
        g = std::move(next);
        cur = p;
      }
    }
    if (cur.reached) return {std::move(g), attempts};
  }
  throw SearchExhausted(std::string(to_string(target)));
}

CaseInstance search_dfs(Branch target, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < kCaseAttemptBudget; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    Graph g;
    try {
      g = attempt % 4 == 3 ? bridged_cubic(rng) : random_candidate(rng, 3, 5);
    } catch (const GenRetryExhausted&) {
      continue;
    }
    if (!connected(g)) continue;
    RunLog log;
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), VertexId{0});
    try {
      color_regular_dfs(g, all, log);
    } catch (const InternalAssertion&) {
      continue;
    }
    if (hit(log, target)) return {std::move(g), attempt + 1};
  }
  throw SearchExhausted(std::string(to_string(target)));
}

}  // namespace

std::vector<Branch> case_branches() {
  return {Branch::kFreeColorAtV,        Branch::kNeighborRecolor,     Branch::kSplitComponents,
          Branch::kNonPathComponent,    Branch::kPostNormalization,   Branch::kThirdColorBreak,
          Branch::kAdjacentPairRecolor, Branch::kFinalDoubleColorSplit, Branch::kFinalEdgeAbsent,
          Branch::kFinalEdgePresent,    Branch::kHamPath,             Branch::kSplit,
          Branch::kPairRemoval};
}

bool is_repair_branch(Branch b) {
  return b != Branch::kHamPath && b != Branch::kSplit && b != Branch::kSplitAtRoot &&
         b != Branch::kPairRemoval;
}

std::vector<Branch> replay_branches(const Graph& g, bool repair) {
  RunLog log;
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  if (repair) {
    color_regular_repair(g, all, log);
  } else {
    color_regular_dfs(g, all, log);
  }
  return log.branches;
}

CaseInstance generate_case_instance(Branch branch, std::uint64_t seed) {
  return is_repair_branch(branch) ? search_repair(branch, seed) : search_dfs(branch, seed);
}

CaseInstance generate_case_instance(std::string_view name, std::uint64_t seed) {
  const auto branch = branch_from_string(name);
  if (!branch) throw UnknownName(std::string(name));
  return generate_case_instance(*branch, seed);
}

}  // namespace brooks::testkit
