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

#include "brooks/repair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "brooks/greedy.hpp"

namespace brooks {

namespace {

constexpr std::array<std::pair<int, int>, 3> kPairRoles{{{0, 1}, {0, 2}, {1, 2}}};
constexpr std::array<int, 3> kThirdRole{2, 1, 0};
constexpr std::array<const char*, 3> kPairName{"12", "13", "23"};

std::string join(std::span<const VertexId> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

}  // namespace

KempeRepair::KempeRepair(const Graph& g, Coloring coloring, VertexId v, RunLog& log)
    : g_(g),
      coloring_(std::move(coloring)),
      log_(log),
      k_(static_cast<Color>(g.degree(v))),
      scratch_(k_),
      marks_(g) {
  state_.v = v;
  const auto nbrs = g.neighbors(v);
  state_.neighbors.assign(nbrs.begin(), nbrs.end());
  if (coloring_.k() < k_) coloring_.set_k(k_);
}

void KempeRepair::fail(const char* step, const std::string& detail) {
  log_.event(step, "assertion: " + detail);
  throw InternalAssertion(step, detail, log_.trace);
}

void KempeRepair::check(const char* step) {
  if (!log_.check_steps) return;
  const auto result = validate_coloring(g_, coloring_, false);
  if (!result.ok()) fail(step, "partial coloring invalid: " + result.describe());
}

void KempeRepair::recolor(VertexId u, Color col) {
  log_.event("recolor", std::to_string(u) + ": " + std::to_string(coloring_[u]) + " -> " +
                            std::to_string(col));
  coloring_.set(u, col);
  ++log_.counters.recolorings;
}

void KempeRepair::finish(const char* step, Color col_for_v) {
  log_.event(step, "v=" + std::to_string(state_.v) + " <- " + std::to_string(col_for_v));
  coloring_.set(state_.v, col_for_v);
  check(step);
}

Color KempeRepair::free_color_other_than(Color own) {
  for (Color col = 1; col <= k_; ++col) {
    if (col != own && !scratch_.present(col)) return col;
  }
  return kUncolored;
}

StepOutcome KempeRepair::step_free_color() {
  const VertexId v = state_.v;
  scratch_.mark_neighborhood(g_, coloring_, v, &log_.counters);
  if (const Color free = scratch_.first_missing(k_); free != kUncolored) {
    log_.hit(Branch::kFreeColorAtV);
    finish("free_color", free);
    return StepOutcome::kDone;
  }
  // All Δ colors appear on the Δ neighbors, so they are pairwise distinct.
  for (VertexId u : state_.neighbors) {
    scratch_.mark_neighborhood(g_, coloring_, u, &log_.counters);
    const Color own = coloring_[u];
    if (const Color mu = free_color_other_than(own); mu != kUncolored) {
      state_.mu = mu;
      log_.hit(Branch::kNeighborRecolor);
      recolor(u, mu);
      finish("free_color", own);
      return StepOutcome::kDone;
    }
  }
  // Rainbow: each neighbor sees every other color exactly once on its Δ-1
  // colored neighbors.
  for (VertexId u : state_.neighbors) {
    const std::size_t distinct = scratch_.mark_neighborhood(g_, coloring_, u, &log_.counters);
    if (distinct != k_ - 1 || scratch_.present(coloring_[u])) {
      fail("free_color", "neighbor " + std::to_string(u) + " lacks a rainbow neighborhood");
    }
  }
  log_.event("free_color", "rainbow condition holds at every neighbor");
  return StepOutcome::kContinue;
}

StepOutcome KempeRepair::step_choose_roles() {
  const auto& nbrs = state_.neighbors;
  std::size_t first = nbrs.size();
  std::size_t second = nbrs.size();
  for (std::size_t i = 0; i < nbrs.size() && first == nbrs.size(); ++i) {
    marks_.mark(nbrs[i]);
    log_.counters.edges_examined += g_.degree(nbrs[i]);
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!marks_.adjacent_to_marked(nbrs[j])) {
        first = i;
        second = j;
        break;
      }
    }
  }
  if (first == nbrs.size()) fail("choose_roles", "neighborhood of v is a clique");

  VertexId role1 = nbrs[first];
  VertexId role3 = nbrs[second];
  VertexId role2 = kNoVertex;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (i != first && i != second) {
      role2 = nbrs[i];
      break;
    }
  }
  if (g_.adjacent(role2, role3) && !g_.adjacent(role1, role2)) std::swap(role1, role3);

  state_.role_vertex = {role1, role2, role3};
  for (int r = 0; r < 3; ++r) state_.role_color[r] = coloring_[state_.role_vertex[r]];
  state_.roles_assigned = true;
  log_.event("choose_roles", "v1=" + std::to_string(role1) + " v2=" + std::to_string(role2) +
                                 " v3=" + std::to_string(role3) + " colors " +
                                 std::to_string(state_.role_color[0]) + "," +
                                 std::to_string(state_.role_color[1]) + "," +
                                 std::to_string(state_.role_color[2]));
  return StepOutcome::kContinue;
}

StepOutcome KempeRepair::step_normalize_pair(RolePair pair) {
  const auto [ra, rb] = kPairRoles[static_cast<int>(pair)];
  const VertexId va = state_.role_vertex[ra];
  const VertexId vb = state_.role_vertex[rb];
  const Color a = state_.role_color[ra];
  const Color b = state_.role_color[rb];
  const char* step = "normalize";

  KempeComponent comp = kempe_component(g_, coloring_, va, a, b, &log_.counters);
  if (!comp.contains(vb)) {
    log_.hit(Branch::kSplitComponents);
    log_.event(step, std::string("pair ") + kPairName[static_cast<int>(pair)] +
                         ": endpoints in different components, interchanging at " +
                         std::to_string(va));
    kempe_swap(g_, coloring_, comp, &log_.counters);
    finish(step, a);
    return StepOutcome::kDone;
  }
  if (!comp.is_simple_path) {
    if (!comp.first_branch_from) fail(step, "non-path component without a branch vertex");
    const VertexId y = *comp.first_branch_from;
    scratch_.mark_neighborhood(g_, coloring_, y, &log_.counters);
    const Color mu = free_color_other_than(coloring_[y]);
    if (mu == kUncolored) fail(step, "branch vertex " + std::to_string(y) + " has no free color");
    state_.mu = mu;
    log_.hit(Branch::kNonPathComponent);
    recolor(y, mu);
    swap_prefix_on_path(g_, coloring_, comp.members, y, a, b, &log_.counters);
    finish(step, a);
    return StepOutcome::kDone;
  }
  if (comp.members.back() != vb) fail(step, "path does not end at the partner neighbor");
  log_.event(step, std::string("P") + kPairName[static_cast<int>(pair)] + " = " +
                       join(comp.members));
  state_.paths[static_cast<int>(pair)] = std::move(comp);
  return StepOutcome::kContinue;
}

void KempeRepair::begin_post_normalization() {
  if (post_normalization_) return;
  post_normalization_ = true;
  log_.hit(Branch::kPostNormalization);
  log_.counters.path_edge_examinations = 0;
  log_.counters.path_edges = 0;
  for (int p = 0; p < 3; ++p) {
    if (!state_.paths[p]) fail("third_color_break", "paths not established");
    const auto& members = state_.paths[p]->members;
    path_pos_[p].assign(g_.num_vertices(), kNoVertex);
    for (std::size_t i = 0; i < members.size(); ++i) {
      path_pos_[p][members[i]] = static_cast<VertexId>(i);
    }
    log_.counters.path_edges += members.size() - 1;
  }
  scan_slot_.assign(g_.num_vertices(), kNoVertex);
}

bool KempeRepair::is_path_edge(VertexId u, VertexId w) const {
  for (int p = 0; p < 3; ++p) {
    const VertexId pu = path_pos_[p][u];
    const VertexId pw = path_pos_[p][w];
    if (pu != kNoVertex && pw != kNoVertex && (pu + 1 == pw || pw + 1 == pu)) return true;
  }
  return false;
}

const KempeRepair::Scan& KempeRepair::scan(VertexId u) {
  if (scan_slot_[u] != kNoVertex) return scans_[scan_slot_[u]];
  Scan s;
  scratch_.reset(k_);
  for (VertexId w : g_.neighbors(u)) {
    ++log_.counters.edges_examined;
    if (is_path_edge(u, w)) ++log_.counters.path_edge_examinations;
    const Color col = coloring_[w];
    scratch_.add(col);
    for (int r = 0; r < 3; ++r) {
      if (col == state_.role_color[r]) ++s.role_color_count[r];
    }
  }
  s.free_color = free_color_other_than(coloring_[u]);
  scan_slot_[u] = static_cast<std::uint32_t>(scans_.size());
  scans_.push_back(s);
  return scans_.back();
}

StepOutcome KempeRepair::step_third_color_break(RolePair pair) {
  begin_post_normalization();
  const int p = static_cast<int>(pair);
  const auto [ra, rb] = kPairRoles[p];
  const int rc = kThirdRole[p];
  const auto& path = state_.paths[p]->members;
  const char* step = "third_color_break";

  for (VertexId x : path) {
    if (scan(x).role_color_count[rc] != 0) continue;
    if (x == path.front() || x == path.back()) {
      fail(step, "path endpoint " + std::to_string(x) + " misses the third color");
    }
    log_.hit(Branch::kThirdColorBreak);
    log_.event(step, std::string("P") + kPairName[p] + ": vertex " + std::to_string(x) +
                         " has no neighbor of color " + std::to_string(state_.role_color[rc]));
    recolor(x, state_.role_color[rc]);
    swap_prefix_on_path(g_, coloring_, path, x, state_.role_color[ra], state_.role_color[rb],
                        &log_.counters);
    finish(step, state_.role_color[ra]);
    return StepOutcome::kDone;
  }
  return StepOutcome::kContinue;
}

StepOutcome KempeRepair::step_adjacent_pair_recolor() {
  const auto [v1, v2, v3] = state_.role_vertex;
  const auto [c1, c2, c3] = state_.role_color;
  if (g_.adjacent(v1, v3) || !g_.adjacent(v1, v2) || !g_.adjacent(v2, v3)) {
    return StepOutcome::kContinue;
  }
  log_.hit(Branch::kAdjacentPairRecolor);
  recolor(v1, c2);
  recolor(v3, c2);
  recolor(v2, c3);
  coloring_.set(state_.v, c1);
  log_.event("adjacent_pair_recolor", "v=" + std::to_string(state_.v) + " <- " +
                                          std::to_string(c1));
  const auto result = validate_coloring(g_, coloring_, false);
  if (!result.ok()) fail("adjacent_pair_recolor", "triple recolor invalid: " + result.describe());
  return StepOutcome::kDone;
}

StepOutcome KempeRepair::step_final_maneuver() {
  const char* step = "final_maneuver";
  const auto [v1, v2, v3] = state_.role_vertex;
  const auto [c1, c2, c3] = state_.role_color;
  if (g_.adjacent(v1, v3) || g_.adjacent(v2, v3)) {
    fail(step, "expected edges (v1,v3) and (v2,v3) to be absent");
  }
  const auto& p13 = state_.paths[static_cast<int>(RolePair::k13)]->members;
  const auto& p23 = state_.paths[static_cast<int>(RolePair::k23)]->members;
  if (p13.size() < 3 || p23.size() < 3) fail(step, "P13 and P23 must have interior vertices");

  // (i) a vertex of P23 with two neighbors of color 1 can leave the path.
  for (VertexId u : p23) {
    const Scan& s = scan(u);
    if (s.role_color_count[0] < 2) continue;
    if (u == v2 || u == v3) fail(step, "endpoint of P23 sees color 1 twice");
    if (s.free_color == kUncolored) fail(step, "vertex " + std::to_string(u) + " has no free color");
    state_.mu = s.free_color;
    log_.hit(Branch::kFinalDoubleColorSplit);
    recolor(u, s.free_color);
    swap_prefix_on_path(g_, coloring_, p23, u, c2, c3, &log_.counters);
    finish(step, c2);
    return StepOutcome::kDone;
  }
  for (VertexId u : p23) {
    if (scan(u).role_color_count[0] != 1) {
      fail(step, "P23 vertex " + std::to_string(u) + " has no neighbor of color 1");
    }
  }

  // (ii) interchange 1/3 along P13, then 2/3 along P23 without v3.
  kempe_swap(g_, coloring_, *state_.paths[static_cast<int>(RolePair::k13)], &log_.counters);
  log_.event(step, "interchanged colors " + std::to_string(c1) + "/" + std::to_string(c3) +
                       " on P13");
  check(step);
  if (p23.back() != v3) fail(step, "P23 does not end at v3");
  const VertexId w = p23[p23.size() - 2];
  state_.w = w;
  if (coloring_[w] != c2) fail(step, "neighbor w of v3 on P23 is not colored 2");

  const bool v1v2 = g_.adjacent(v1, v2);
  {
    // The 2-3 chain through w must still be P23 minus v3 (plus v1, which
    // joins through v2 when they are adjacent). Checked without counting.
    const KempeComponent chain = kempe_component(g_, coloring_, w, c2, c3, nullptr);
    std::vector<VertexId> expected(p23.begin(), p23.end() - 1);
    if (v1v2) expected.push_back(v1);
    std::vector<VertexId> got = chain.members;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) {
      std::vector<VertexId> extra;
      std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                          std::back_inserter(extra));
      fail(step, "2-3 chain of w changed after the 1-3 interchange; extra vertices: " +
                     join(extra));
    }
  }
  swap_prefix_on_path(g_, coloring_, p23, v3, c2, c3, &log_.counters);
  log_.event(step, "w=" + std::to_string(w) + "; interchanged colors " + std::to_string(c2) +
                       "/" + std::to_string(c3) + " on P23 minus v3");

  if (!v1v2) {
    log_.hit(Branch::kFinalEdgeAbsent);
    finish(step, c2);
    return StepOutcome::kDone;
  }
  log_.hit(Branch::kFinalEdgePresent);
  recolor(v1, c2);
  recolor(v2, c1);
  finish(step, c3);
  return StepOutcome::kDone;
}

void KempeRepair::done(const char* step) {
  const auto result = validate_coloring(g_, coloring_, true);
  if (!result.ok()) fail(step, "final coloring invalid: " + result.describe());
}

void KempeRepair::run() {
  if (step_free_color() == StepOutcome::kDone) return done("free_color");
  step_choose_roles();
  for (RolePair pair : {RolePair::k13, RolePair::k23, RolePair::k12}) {
    if (step_normalize_pair(pair) == StepOutcome::kDone) return done("normalize");
  }
  run_from_third_color_break();
}

void KempeRepair::run_from_third_color_break() {
  for (RolePair pair : {RolePair::k13, RolePair::k12, RolePair::k23}) {
    if (step_third_color_break(pair) == StepOutcome::kDone) return done("third_color_break");
  }
  if (step_adjacent_pair_recolor() == StepOutcome::kDone) return done("adjacent_pair_recolor");
  step_final_maneuver();
  done("final_maneuver");
}

Coloring initial_repair_coloring(const Graph& g, VertexId v, RunLog& log) {
  const Color k = static_cast<Color>(g.max_degree());
  log.event("delete", "v=" + std::to_string(v) + " k=" + std::to_string(k));
  const std::vector<VertexId> removed{v};
  const InducedSubgraph rest = induced_delete(g, removed);
  Coloring coloring(g.num_vertices(), k);
  for (const auto& part : connected_components(rest.graph)) {
    const Coloring local = color_low_degree_component(rest.graph, part, k, &log);
    for (VertexId u : part) coloring.set(rest.new_to_old[u], local[u]);
  }
  return coloring;
}

Coloring color_regular_repair(const Graph& g, std::span<const VertexId> comp, RunLog& log) {
  if (comp.size() != g.num_vertices()) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    std::vector<VertexId> all(comp.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    const Coloring local = color_regular_repair(sub.graph, all, log);
    Coloring out(g.num_vertices(), local.k());
    for (std::size_t i = 0; i < all.size(); ++i) out.set(sub.new_to_old[i], local[i]);
    return out;
  }

  const std::size_t n = g.num_vertices();
  const std::size_t delta = g.max_degree();
  if (delta < 3 || n <= delta + 1) {
    throw std::invalid_argument("color_regular_repair needs a non-complete graph with Δ >= 3");
  }
  for (VertexId u = 0; u < n; ++u) {
    if (g.degree(u) != delta) throw std::invalid_argument("color_regular_repair needs a regular graph");
  }

  const VertexId v = 0;
  KempeRepair repair(g, initial_repair_coloring(g, v, log), v, log);
  repair.run();
  return repair.take_coloring();
}

}  // namespace brooks
