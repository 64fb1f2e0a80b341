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
#include <stdexcept>
#include <string>
#include <vector>

#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

class DfsError : public std::runtime_error {
 public:
  DfsError(VertexId u, VertexId v)
      : std::runtime_error("ForcedEdgeMissing(" + std::to_string(u) + "," + std::to_string(v) +
                           ")"),
        u_(u),
        v_(v) {}

  VertexId u() const noexcept { return u_; }
  VertexId v() const noexcept { return v_; }

 private:
  VertexId u_;
  VertexId v_;
};

/// Rooted depth-first search tree with low-link values.
///
/// Per-vertex arrays span the whole graph; vertices outside the traversed
/// component have `preorder == kNoVertex`.
struct DfsTree {
  VertexId root = kNoVertex;
  std::vector<VertexId> parent;
  std::vector<VertexId> preorder;
  std::vector<VertexId> postorder;
  std::vector<VertexId> low;
  std::vector<VertexId> order;          // vertices by preorder
  std::vector<VertexId> post_sequence;  // vertices by postorder
  std::vector<VertexId> forced_prefix;

  bool visited(VertexId v) const { return preorder[v] != kNoVertex; }
  std::size_t size() const { return order.size(); }

  /// Tree children of v in discovery order.
  std::span<const VertexId> children(VertexId v) const {
    return {child_list_.data() + child_offsets_[v], child_list_.data() + child_offsets_[v + 1]};
  }

  /// True when no vertex has more than one child.
  bool is_path() const;

  /// Non-root articulation test: some child c has low(c) >= preorder(v).
  bool separates_below(VertexId v) const;

 private:
  friend struct DfsBuilder;
  std::vector<VertexId> child_offsets_;
  std::vector<VertexId> child_list_;
};

struct DfsOptions {
  // Discovery follows this vertex sequence first; forced[0] must be the root.
  std::span<const VertexId> forced;
  // Restricts traversal to vertices with allowed[v] != 0 (root is always allowed).
  const std::vector<char>* allowed = nullptr;
  Counters* counters = nullptr;
};

/// Iterative DFS; after the forced prefix, neighbors are explored in ascending
/// order. Low-link values are computed in the same pass.
DfsTree dfs(const Graph& g, VertexId root, DfsOptions options = {});

}  // namespace brooks
