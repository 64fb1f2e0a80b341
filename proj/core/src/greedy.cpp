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

#include "brooks/greedy.hpp"

#include <stdexcept>

namespace brooks {

void greedy_post_order_into(const Graph& g, std::span<const VertexId> comp, Color k,
                            VertexId root, Coloring& c, RunLog* log) {
  Counters* counters = log ? &log->counters : nullptr;
  std::vector<char> allowed(g.num_vertices(), 0);
  std::size_t pending = 0;
  for (VertexId v : comp) {
    if (!c.colored(v)) {
      allowed[v] = 1;
      ++pending;
    }
  }
  const DfsTree tree = dfs(g, root, {.forced = {}, .allowed = &allowed, .counters = counters});
  const std::size_t reached = tree.size() - (c.colored(root) || !allowed[root] ? 1 : 0);
  if (reached != pending) {
    throw std::invalid_argument("greedy_post_order: uncolored part of comp is not reachable from " +
                                std::to_string(root));
  }

  ColorScratch scratch(k);
  for (VertexId v : tree.post_sequence) {
    if (c.colored(v)) continue;
    scratch.mark_neighborhood(g, c, v, counters);
    const Color col = scratch.first_missing(k);
    if (col == kUncolored) {
      throw ColoringError(ColoringError::Kind::kNoFreeColor,
                          "NoFreeColor(" + std::to_string(v) + ")", v);
    }
    c.set(v, col);
  }
}

Coloring greedy_post_order(const Graph& g, std::span<const VertexId> comp, Color k,
                           VertexId root, std::span<const std::pair<VertexId, Color>> precolored,
                           RunLog* log) {
  Coloring c(g.num_vertices(), k);
  for (const auto& [v, col] : precolored) c.set(v, col);
  greedy_post_order_into(g, comp, k, root, c, log);
  return c;
}

Coloring color_low_degree_component(const Graph& g, std::span<const VertexId> comp, Color k,
                                    RunLog* log) {
  for (VertexId v : comp) {
    if (g.degree(v) < k) {
      if (log) log->event("greedy", "root " + std::to_string(v) + " k=" + std::to_string(k));
      return greedy_post_order(g, comp, k, v, {}, log);
    }
  }
  throw ColoringError(ColoringError::Kind::kNoLowDegreeVertex, "NoLowDegreeVertex");
}

}  // namespace brooks
