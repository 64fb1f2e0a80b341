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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brooks {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kMalformedHeader,
    kEdgeCountMismatch,
    kTokenError,
  };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct BuildOptions {
  // Merge repeated edges instead of rejecting them.
  bool coalesce_duplicates = false;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. The object is safe to share between
/// concurrent readers once constructed.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  static Graph build(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                     BuildOptions options = {});

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Largest degree; 0 for the empty and edgeless graphs.
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Binary search over the sorted neighbor list of the lower-degree endpoint.
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, ascending.
  EdgeList edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::size_t max_degree_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                         BuildOptions options = {}) {
  return Graph::build(n, edges, options);
}

/// Constant-time adjacency queries against one marked vertex at a time.
///
/// `mark(v)` stamps v's neighbors; `adjacent_to_marked(u)` then answers in O(1).
/// Re-marking costs O(deg) and never clears the whole array.
class NeighborMarks {
 public:
  explicit NeighborMarks(const Graph& g) : g_(&g), stamp_(g.num_vertices(), 0) {}

  void mark(VertexId v);
  bool adjacent_to_marked(VertexId u) const { return stamp_[u] == current_; }
  VertexId marked() const noexcept { return marked_; }

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
  VertexId marked_ = kNoVertex;
};

enum class GraphClass {
  kComplete,
  kOddCycle,
  kEvenCycle,
  kPath,
  kTrivialOrSmallDelta,
  kHasLowDegreeVertex,
  kDeltaRegularNonComplete,
};

std::string to_string(GraphClass c);

/// Components ordered by their smallest vertex; each component sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Classifies a connected component using its own maximum degree.
GraphClass classify_component(const Graph& g, std::span<const VertexId> comp);

struct SeparationResult {
  bool separates = false;
  // Components of comp - s, each sorted, ordered by smallest vertex. Empty
  // unless `separates`.
  std::vector<std::vector<VertexId>> sides;
};

/// Articulation test for s inside the connected vertex set comp.
SeparationResult is_separation_vertex(const Graph& g, std::span<const VertexId> comp,
                                      VertexId s);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> old_to_new;  // kNoVertex for dropped vertices
  std::vector<VertexId> new_to_old;
};

/// Subgraph induced by all vertices except `removed`; survivors keep their
/// relative order.
InducedSubgraph induced_delete(const Graph& g, std::span<const VertexId> removed);

/// Subgraph induced by `keep`, relabeled in the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

// Text formats. Vertices are 0-based in memory; DIMACS is 1-based on disk.

Graph parse_dimacs(std::string_view text, BuildOptions options = {});
std::string write_dimacs(const Graph& g);

/// Whitespace edge list, "u v" per line, 0-based, optional "n m" first line.
Graph parse_edge_list(std::string_view text, BuildOptions options = {});
std::string write_edge_list(const Graph& g);

}  // namespace brooks
