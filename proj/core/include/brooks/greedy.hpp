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

#include <span>
#include <utility>

#include "brooks/coloring.hpp"
#include "brooks/dfs.hpp"
#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

/// Colors the vertices of `comp` that are still uncolored in `c`, children
/// before parents in a DFS from `root`, each with its smallest missing color.
///
/// Already-colored vertices other than the root are neither traversed nor
/// recolored, but their colors count as neighbor colors. The DFS must reach
/// every uncolored vertex of `comp`. Throws ColoringError(kNoFreeColor) when a
/// vertex sees all k colors, which cannot happen if deg(root) < k inside comp,
/// or root has two equally colored neighbors, or root is already colored.
void greedy_post_order_into(const Graph& g, std::span<const VertexId> comp, Color k,
                            VertexId root, Coloring& c, RunLog* log = nullptr);

Coloring greedy_post_order(const Graph& g, std::span<const VertexId> comp, Color k,
                           VertexId root,
                           std::span<const std::pair<VertexId, Color>> precolored = {},
                           RunLog* log = nullptr);

/// Greedy post-order coloring rooted at the smallest-index vertex of comp with
/// degree < k.
Coloring color_low_degree_component(const Graph& g, std::span<const VertexId> comp, Color k,
                                    RunLog* log = nullptr);

}  // namespace brooks
