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

#include <algorithm>

#include "brooks/coloring.hpp"

namespace brooks {

bool KempeComponent::contains(VertexId v) const {
  return std::find(members.begin(), members.end(), v) != members.end();
}

KempeComponent kempe_component(const Graph& g, const Coloring& c, VertexId start, Color a,
                               Color b, Counters* counters) {
  if (a == b || a == kUncolored || b == kUncolored || (c[start] != a && c[start] != b)) {
    throw ColoringError(ColoringError::Kind::kStartNotInClasses,
                        "StartNotInClasses(" + std::to_string(start) + ")", start);
  }
  KempeComponent comp;
  comp.a = a;
  comp.b = b;
  comp.start = start;

  std::vector<VertexId> slot(g.num_vertices(), kNoVertex);
  std::vector<std::uint32_t> internal_degree;
  std::vector<std::pair<VertexId, std::size_t>> stack;

  slot[start] = 0;
  comp.members.push_back(start);
  internal_degree.push_back(0);
  stack.emplace_back(start, 0);
  std::uint64_t examined = 0;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const VertexId w = nbrs[next++];
    ++examined;
    if (c[w] != a && c[w] != b) continue;
    ++internal_degree[slot[u]];
    if (slot[w] == kNoVertex) {
      slot[w] = static_cast<VertexId>(comp.members.size());
      comp.members.push_back(w);
      internal_degree.push_back(0);
      stack.emplace_back(w, 0);
    }
  }
  if (counters) counters->edges_examined += examined;

  std::size_t ends = 0;
  bool low_degree = true;
  for (std::size_t i = 0; i < comp.members.size(); ++i) {
    if (internal_degree[i] > 2) low_degree = false;
    if (internal_degree[i] <= 1) ++ends;
  }
  comp.is_simple_path = low_degree && (comp.members.size() == 1 || ends == 2);
  if (comp.is_simple_path) {
    for (std::size_t i = 0; i < comp.members.size(); ++i) {
      if (internal_degree[i] <= 1) comp.endpoints.push_back(comp.members[i]);
    }
  }
  if (internal_degree[0] <= 1) {
    // Preorder from a degree-1 start follows the walk until the first branch.
    for (std::size_t i = 0; i < comp.members.size(); ++i) {
      if (internal_degree[i] > 2) {
        comp.first_branch_from = comp.members[i];
        break;
      }
    }
  }
  return comp;
}

void kempe_swap(const Graph& g, Coloring& c, const KempeComponent& comp, Counters* counters) {
  (void)g;
  for (VertexId v : comp.members) {
    if (c[v] != comp.a && c[v] != comp.b) {
      throw ColoringError(ColoringError::Kind::kStaleComponent,
                          "StaleComponent at vertex " + std::to_string(v), v);
    }
  }
  for (VertexId v : comp.members) c.set(v, c[v] == comp.a ? comp.b : comp.a);
  if (counters) {
    ++counters->kempe_swaps;
    counters->recolorings += comp.members.size();
  }
}

void swap_prefix_on_path(const Graph& g, Coloring& c, std::span<const VertexId> path,
                         VertexId upto_exclusive, Color a, Color b, Counters* counters) {
  (void)g;
  const auto stop = std::find(path.begin(), path.end(), upto_exclusive);
  if (stop == path.end()) {
    throw ColoringError(ColoringError::Kind::kVertexNotOnPath,
                        "VertexNotOnPath(" + std::to_string(upto_exclusive) + ")",
                        upto_exclusive);
  }
  for (auto it = path.begin(); it != stop; ++it) {
    if (c[*it] != a && c[*it] != b) {
      throw ColoringError(ColoringError::Kind::kStaleComponent,
                          "StaleComponent at vertex " + std::to_string(*it), *it);
    }
  }
  for (auto it = path.begin(); it != stop; ++it) c.set(*it, c[*it] == a ? b : a);
  if (counters && stop != path.begin()) {
    ++counters->kempe_swaps;
    counters->recolorings += static_cast<std::uint64_t>(stop - path.begin());
  }
}

}  // namespace brooks
