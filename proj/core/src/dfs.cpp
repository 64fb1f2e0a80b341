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

#include "brooks/dfs.hpp"

#include <algorithm>
#include <cstdint>

namespace brooks {

struct DfsBuilder {
  static void link_children(DfsTree& tree, std::size_t n) {
    tree.child_offsets_.assign(n + 1, 0);
    for (VertexId v : tree.order) {
      if (tree.parent[v] != kNoVertex) ++tree.child_offsets_[tree.parent[v] + 1];
    }
    for (std::size_t v = 0; v < n; ++v) tree.child_offsets_[v + 1] += tree.child_offsets_[v];
    tree.child_list_.resize(tree.child_offsets_[n]);
    std::vector<VertexId> cursor(tree.child_offsets_.begin(), tree.child_offsets_.end() - 1);
    for (VertexId v : tree.order) {
      if (tree.parent[v] != kNoVertex) tree.child_list_[cursor[tree.parent[v]]++] = v;
    }
  }
};

bool DfsTree::is_path() const {
  for (VertexId v : order) {
    if (children(v).size() > 1) return false;
  }
  return true;
}

bool DfsTree::separates_below(VertexId v) const {
  for (VertexId c : children(v)) {
    if (low[c] >= preorder[v]) return true;
  }
  return false;
}

DfsTree dfs(const Graph& g, VertexId root, DfsOptions options) {
  const std::size_t n = g.num_vertices();
  const auto allowed = [&](VertexId v) {
    return v == root || options.allowed == nullptr || (*options.allowed)[v] != 0;
  };

  const auto forced = options.forced;
  if (!forced.empty() && forced.front() != root) throw DfsError(root, forced.front());
  for (std::size_t i = 0; i + 1 < forced.size(); ++i) {
    if (forced[i] == forced[i + 1] || !allowed(forced[i + 1]) ||
        !g.adjacent(forced[i], forced[i + 1])) {
      throw DfsError(forced[i], forced[i + 1]);
    }
  }

  DfsTree tree;
  tree.root = root;
  tree.order.reserve(n);
  tree.post_sequence.reserve(n);

  // Per-vertex state lives in one record while the walk runs, so each newly
  // reached vertex costs one cache miss instead of four. Unpacked at the end.
  struct Node {
    VertexId parent = kNoVertex;
    VertexId preorder = kNoVertex;
    VertexId postorder = kNoVertex;
    VertexId low = kNoVertex;
  };
  std::vector<Node> node(n);

  struct Frame {
    VertexId v;
    std::uint32_t next;  // index into v's neighbor list
    VertexId forced_child;
  };
  std::vector<Frame> stack;
  stack.reserve(n);
  std::uint64_t examined = 0;
  std::size_t forced_depth = 0;

  const auto discover = [&](VertexId v, VertexId parent) {
    Node& nv = node[v];
    nv.parent = parent;
    nv.preorder = static_cast<VertexId>(tree.order.size());
    nv.low = nv.preorder;
    tree.order.push_back(v);
    VertexId forced_child = kNoVertex;
    if (forced_depth < forced.size() && forced[forced_depth] == v) {
      tree.forced_prefix.push_back(v);
      ++forced_depth;
      if (forced_depth < forced.size()) forced_child = forced[forced_depth];
    }
    // The walk inspects every neighbor of v next; issuing those loads together
    // overlaps misses that would otherwise be paid one after another.
    for (VertexId w : g.neighbors(v)) __builtin_prefetch(&node[w]);
    stack.push_back({v, 0, forced_child});
  };

  discover(root, kNoVertex);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const VertexId u = top.v;
    VertexId w = kNoVertex;
    if (top.forced_child != kNoVertex) {
      w = top.forced_child;
      top.forced_child = kNoVertex;
    } else {
      const auto nbrs = g.neighbors(u);
      if (top.next == nbrs.size()) {
        Node& nu = node[u];
        nu.postorder = static_cast<VertexId>(tree.post_sequence.size());
        tree.post_sequence.push_back(u);
        stack.pop_back();
        if (nu.parent != kNoVertex) node[nu.parent].low = std::min(node[nu.parent].low, nu.low);
        continue;
      }
      w = nbrs[top.next++];
    }
    ++examined;
    if (!allowed(w)) continue;
    const VertexId w_pre = node[w].preorder;
    if (w_pre == kNoVertex) {
      discover(w, u);
    } else if (w != node[u].parent) {
      node[u].low = std::min(node[u].low, w_pre);
    }
  }

  tree.parent.resize(n);
  tree.preorder.resize(n);
  tree.postorder.resize(n);
  tree.low.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    tree.parent[v] = node[v].parent;
    tree.preorder[v] = node[v].preorder;
    tree.postorder[v] = node[v].postorder;
    tree.low[v] = node[v].low;
  }
  if (options.counters) options.counters->edges_examined += examined;
  DfsBuilder::link_children(tree, n);
  return tree;
}

}  // namespace brooks
