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

#include "brooks/graph.hpp"

#include <algorithm>
#include <numeric>

namespace brooks {

namespace {

std::string edge_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                   BuildOptions options) {
  if (n >= kNoVertex) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange, "vertex count too large");
  }
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "VertexOutOfRange: edge " + edge_name(u, v) + " with n=" +
                           std::to_string(n));
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::kSelfLoop, "SelfLoop(" + std::to_string(u) + ")");
    }
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }

  // Sort each list and detect duplicates. The first offender is the one whose
  // (u, v) pair appears earliest in the input, so report by scanning input order.
  bool has_duplicates = false;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) has_duplicates = true;
  }

  if (has_duplicates) {
    if (!options.coalesce_duplicates) {
      std::vector<std::pair<VertexId, VertexId>> seen;
      seen.reserve(edges.size());
      for (const auto& [u, v] : edges) seen.emplace_back(std::min(u, v), std::max(u, v));
      std::vector<std::size_t> order(seen.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
      std::size_t offender = seen.size();
      for (std::size_t i = 1; i < order.size(); ++i) {
        if (seen[order[i]] == seen[order[i - 1]]) offender = std::min(offender, order[i]);
      }
      const auto [a, b] = edges[offender];
      throw GraphError(GraphError::Kind::kDuplicateEdge, "DuplicateEdge" + edge_name(a, b));
    }
    std::vector<std::size_t> offsets(n + 1, 0);
    std::vector<VertexId> adjacency;
    adjacency.reserve(g.adjacency_.size());
    for (std::size_t v = 0; v < n; ++v) {
      auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::unique_copy(first, last, std::back_inserter(adjacency));
      offsets[v + 1] = adjacency.size();
    }
    g.offsets_ = std::move(offsets);
    g.adjacency_ = std::move(adjacency);
  }

  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange, "VertexOutOfRange" + edge_name(u, v));
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void NeighborMarks::mark(VertexId v) {
  if (++current_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    current_ = 1;
  }
  marked_ = v;
  for (VertexId u : g_->neighbors(v)) stamp_[u] = current_;
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kComplete: return "Complete";
    case GraphClass::kOddCycle: return "OddCycle";
    case GraphClass::kEvenCycle: return "EvenCycle";
    case GraphClass::kPath: return "Path";
    case GraphClass::kTrivialOrSmallDelta: return "TrivialOrSmallDelta";
    case GraphClass::kHasLowDegreeVertex: return "HasLowDegreeVertex";
    case GraphClass::kDeltaRegularNonComplete: return "DeltaRegularNonComplete";
  }
  return "Unknown";
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  // BFS labels components in order of their smallest vertex; a second ascending
  // scan buckets vertices, so each list comes out sorted without a sort.
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::vector<std::size_t> sizes;
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId root = 0; root < n; ++root) {
    if (label[root] != kUnset) continue;
    const std::size_t id = sizes.size();
    queue.clear();
    queue.push_back(root);
    label[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (label[w] == kUnset) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
    sizes.push_back(queue.size());
  }
  std::vector<std::vector<VertexId>> out(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) out[i].reserve(sizes[i]);
  for (VertexId v = 0; v < n; ++v) out[label[v]].push_back(v);
  return out;
}

GraphClass classify_component(const Graph& g, std::span<const VertexId> comp) {
  const std::size_t size = comp.size();
  if (size <= 1) return GraphClass::kTrivialOrSmallDelta;
  std::size_t min_deg = g.degree(comp.front());
  std::size_t max_deg = min_deg;
  for (VertexId v : comp) {
    min_deg = std::min(min_deg, g.degree(v));
    max_deg = std::max(max_deg, g.degree(v));
  }
  if (min_deg == size - 1) return GraphClass::kComplete;
  if (max_deg <= 2) {
    if (min_deg == 2) return size % 2 == 1 ? GraphClass::kOddCycle : GraphClass::kEvenCycle;
    return GraphClass::kPath;
  }
  if (min_deg < max_deg) return GraphClass::kHasLowDegreeVertex;
  return GraphClass::kDeltaRegularNonComplete;
}

SeparationResult is_separation_vertex(const Graph& g, std::span<const VertexId> comp,
                                      VertexId s) {
  // Rooting a DFS at s, s separates iff it gets two or more tree children, and
  // each child's subtree is exactly one component of comp - s.
  const std::size_t n = g.num_vertices();
  std::vector<char> in_comp(n, 0);
  for (VertexId v : comp) in_comp[v] = 1;

  std::vector<char> seen(n, 0);
  seen[s] = 1;
  SeparationResult result;
  std::vector<VertexId> stack;
  for (VertexId child : g.neighbors(s)) {
    if (!in_comp[child] || seen[child]) continue;
    std::vector<VertexId> side;
    stack.assign(1, child);
    seen[child] = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      side.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (in_comp[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(side.begin(), side.end());
    result.sides.push_back(std::move(side));
  }
  if (result.sides.size() < 2) {
    result.sides.clear();
    return result;
  }
  result.separates = true;
  std::sort(result.sides.begin(), result.sides.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

InducedSubgraph induced_delete(const Graph& g, std::span<const VertexId> removed) {
  std::vector<char> drop(g.num_vertices(), 0);
  for (VertexId v : removed) drop[v] = 1;
  std::vector<VertexId> keep;
  keep.reserve(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.num_vertices(), kNoVertex);
  out.new_to_old.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) out.old_to_new[keep[i]] = static_cast<VertexId>(i);
  EdgeList edges;
  for (VertexId old_u : keep) {
    const VertexId u = out.old_to_new[old_u];
    for (VertexId old_w : g.neighbors(old_u)) {
      const VertexId w = out.old_to_new[old_w];
      if (w != kNoVertex && u < w) edges.emplace_back(u, w);
    }
  }
  out.graph = Graph::build(keep.size(), edges);
  return out;
}

}  // namespace brooks
