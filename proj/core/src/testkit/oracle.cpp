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

#include "brooks/testkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace brooks::testkit {

namespace {

class Search {
 public:
  Search(const Graph& g, Color k, const OracleOptions& options)
      : g_(g), k_(k), budget_(options.node_budget), colors_(g.num_vertices(), kUncolored) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return place(0, 0); }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  bool place(std::size_t i, Color used) {
    if (i == order_.size()) return true;
    if (budget_ && ++nodes_ > *budget_) throw BudgetExceeded(nodes_);
    const VertexId u = order_[i];
    const Color top = std::min<Color>(k_, used + 1);
    for (Color c = 1; c <= top; ++c) {
      bool clash = false;
      for (VertexId w : g_.neighbors(u)) {
        if (colors_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors_[u] = c;
      if (place(i + 1, std::max(used, c))) return true;
      colors_[u] = kUncolored;
    }
    return false;
  }

  const Graph& g_;
  Color k_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> order_;
  std::vector<Color> colors_;
};

}  // namespace

std::optional<Coloring> k_colorable(const Graph& g, Color k, const OracleOptions& options) {
  if (g.num_vertices() == 0) return Coloring(k, std::vector<Color>{});
  if (k == 0) return std::nullopt;
  Search search(g, k, options);
  if (!search.run()) return std::nullopt;
  return Coloring(k, search.colors());
}

Color chromatic_number(const Graph& g, const OracleOptions& options) {
  if (g.num_vertices() == 0) return 0;
  for (Color k = 1;; ++k) {
    if (k_colorable(g, k, options)) return k;
  }
}

}  // namespace brooks::testkit
