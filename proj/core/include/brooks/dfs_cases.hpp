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

#pragma once

#include <optional>
#include <span>

#include "brooks/coloring.hpp"
#include "brooks/dfs.hpp"
#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

// Δ-coloring of a connected Δ-regular non-complete graph (Δ >= 3) from one
// DFS whose first two tree edges are forced to (x, v) and (v, y), where x and
// y are non-adjacent neighbors of v. The shape of that tree decides the case:
//
//   ham-path      the tree is a path x, v, y, ...: color x and y alike, then
//                 sweep the path from both ends towards v's third neighbor z.
//   split         the first branching vertex p has a child that separates the
//                 graph (or p is the root): color each side with the cut
//                 vertex as greedy root, then align the cut's color.
//   pair-removal  p's first two children s, t are non-adjacent and neither
//                 separates: give both color 1 and greedily color G - {s, t}
//                 from p.

struct StartTriple {
  VertexId v = kNoVertex;
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
};

struct Branching {
  VertexId p = kNoVertex;
  VertexId s = kNoVertex;
  VertexId t = kNoVertex;
};

enum class DfsCase { kHamPath, kSplit, kPairRemoval };

struct DfsCaseState {
  StartTriple start;
  std::optional<VertexId> z;
  std::optional<Branching> branching;
  std::optional<VertexId> cut;  // set for kSplit
  DfsTree tree;
  DfsCase case_tag = DfsCase::kHamPath;
};

/// v is the smallest vertex of comp with two non-adjacent neighbors; (x, y) is
/// the lexicographically first such pair. Throws InternalAssertion when comp is
/// complete.
StartTriple choose_v_x_y(const Graph& g, std::span<const VertexId> comp,
                         Counters* counters = nullptr);

/// First vertex in preorder with two or more children, with its first two
/// children. Empty iff the tree is a path.
std::optional<Branching> find_first_branching(const DfsTree& tree);

/// `path` is the tree order x, v, y, u4, ..., un.
Coloring case1_color_ham_path(const Graph& g, std::span<const VertexId> path, VertexId v,
                              VertexId x, VertexId y, Color k, RunLog* log = nullptr);

/// Throws ColoringError(kNotSeparation) when `cut` does not separate comp.
Coloring case2a_split_color(const Graph& g, std::span<const VertexId> comp, VertexId cut,
                            Color k, RunLog* log = nullptr);

Coloring case2b_remove_pair_color(const Graph& g, std::span<const VertexId> comp, VertexId p,
                                  VertexId s, VertexId t, Color k, RunLog* log = nullptr);

/// Runs the start-triple choice and the forced DFS and decides the case.
/// `g` must be the connected component itself.
DfsCaseState plan_regular_dfs(const Graph& g, RunLog* log = nullptr);

/// The returned coloring spans g; vertices outside comp stay 0.
Coloring color_regular_dfs(const Graph& g, std::span<const VertexId> comp, RunLog& log);

}  // namespace brooks
