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

#include <gtest/gtest.h>

#include <set>

#include "brooks/coloring.hpp"
#include "brooks/testkit/generators.hpp"
#include "support/brute.hpp"

namespace {

using namespace brooks;

Graph star(std::size_t leaves) {
  EdgeList e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::build(leaves + 1, e);
}

Graph path(std::size_t n) {
  EdgeList e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_coloring(path(3), Coloring(2, {1, 2, 1}), true).ok());

  const auto bad = validate_coloring(path(2), Coloring(2, {2, 2}), true);
  EXPECT_EQ(bad.status, ColoringCheck::Status::kViolation);
  EXPECT_EQ(bad.u, 0u);
  EXPECT_EQ(bad.v, 1u);

  const Graph c5 = testkit::named_graph("c5");
  const auto missing = validate_coloring(c5, Coloring(3, {1, 2, 1, 2, 0}), true);
  EXPECT_EQ(missing.status, ColoringCheck::Status::kUncolored);
  EXPECT_EQ(missing.u, 4u);
  EXPECT_TRUE(validate_coloring(c5, Coloring(3, {1, 2, 1, 2, 0}), false).ok());

  const auto wide = validate_coloring(path(2), Coloring(2, {1, 3}), true);
  EXPECT_EQ(wide.status, ColoringCheck::Status::kOutOfPalette);
}

TEST(Validate, AgreesWithBruteOnRandomAssignments) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = testkit::gnp(1 + rng.below(8), 0.4, rng.next());
    std::vector<Color> c(g.num_vertices());
    for (auto& col : c) col = 1 + static_cast<Color>(rng.below(3));
    EXPECT_EQ(validate_coloring(g, Coloring(3, c), true).ok(), brute::proper(g, c));
  }
}

TEST(MissingColors, Examples) {
  EXPECT_EQ(missing_colors(star(3), Coloring(4, {0, 1, 2, 3}), 0), (std::vector<Color>{4}));
  EXPECT_EQ(missing_colors(Graph::build(1, EdgeList{}), Coloring(3, std::vector<Color>{0}), 0),
            (std::vector<Color>{1, 2, 3}));
  EXPECT_EQ(missing_colors(star(3), Coloring(3, {0, 1, 2, 2}), 0), (std::vector<Color>{3}));
}

TEST(NeighborColorCount, Examples) {
  const Coloring c(3, {0, 1, 1, 3});
  EXPECT_EQ(neighbor_color_count(star(3), c, 0, 1), 2u);
  EXPECT_EQ(neighbor_color_count(star(3), c, 0, 2), 0u);
  EXPECT_EQ(neighbor_color_count(star(3), c, 0, 3), 1u);
}

TEST(Kempe, PathComponent) {
  const Graph g = path(3);
  const Coloring c(3, {1, 3, 1});
  const auto comp = kempe_component(g, c, 0, 1, 3);
  EXPECT_EQ(comp.members, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(comp.is_simple_path);
  EXPECT_EQ(std::set<VertexId>(comp.endpoints.begin(), comp.endpoints.end()),
            (std::set<VertexId>{0, 2}));
}

TEST(Kempe, CycleComponent) {
  const Graph g = testkit::named_graph("c4");
  const Coloring c(3, {1, 3, 1, 3});
  for (VertexId s = 0; s < 4; ++s) {
    const auto comp = kempe_component(g, c, s, 1, 3);
    EXPECT_EQ(comp.members.size(), 4u);
    EXPECT_FALSE(comp.is_simple_path);
    EXPECT_TRUE(comp.endpoints.empty());
  }
}

TEST(Kempe, FirstBranchFromLeaf) {
  const Graph g = star(3);
  const Coloring c(3, {1, 3, 3, 3});
  const auto comp = kempe_component(g, c, 1, 1, 3);
  // The only member with internal degree above two is the center.
  std::optional<VertexId> expect;
  for (VertexId u : comp.members) {
    std::size_t internal = 0;
    for (VertexId w : g.neighbors(u)) internal += comp.contains(w);
    if (internal > 2) expect = u;
  }
  ASSERT_TRUE(comp.first_branch_from.has_value());
  EXPECT_EQ(comp.first_branch_from, expect);
  EXPECT_EQ(*comp.first_branch_from, 0u);
}

TEST(Kempe, StartOutsideClassesThrows) {
  const Graph g = path(3);
  const Coloring c(3, {1, 2, 1});
  try {
    kempe_component(g, c, 1, 1, 3);
    FAIL();
  } catch (const ColoringError& e) {
    EXPECT_EQ(e.kind(), ColoringError::Kind::kStartNotInClasses);
  }
}

TEST(Kempe, SwapAndInvolution) {
  const Graph g = path(3);
  Coloring c(3, {1, 3, 1});
  const Coloring original = c;
  const auto comp = kempe_component(g, c, 0, 1, 3);
  kempe_swap(g, c, comp);
  EXPECT_EQ(c, Coloring(3, {3, 1, 3}));
  kempe_swap(g, c, comp);
  EXPECT_EQ(c, original);
}

TEST(Kempe, SwapPrefix) {
  const Graph g = path(3);
  const std::vector<VertexId> p{0, 1, 2};
  Coloring c(3, {1, 3, 1});
  swap_prefix_on_path(g, c, p, 2, 1, 3);
  EXPECT_EQ(c, Coloring(3, {3, 1, 1}));

  Coloring d(3, {1, 3, 1});
  swap_prefix_on_path(g, d, p, 0, 1, 3);
  EXPECT_EQ(d, Coloring(3, {1, 3, 1}));
}

TEST(Kempe, SwapPrefixRejectsOffPathVertex) {
  const Graph g = path(4);
  const std::vector<VertexId> p{0, 1, 2};
  Coloring c(3, {1, 3, 1, 2});
  try {
    swap_prefix_on_path(g, c, p, 3, 1, 3);
    FAIL();
  } catch (const ColoringError& e) {
    EXPECT_EQ(e.kind(), ColoringError::Kind::kVertexNotOnPath);
  }
}

TEST(Kempe, ComponentMatchesBruteOnRandomColorings) {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const Graph g = testkit::gnp(2 + rng.below(20), 0.2, rng.next());
    const auto colors = brute::random_proper_coloring(g, rng);
    const Color k = *std::max_element(colors.begin(), colors.end());
    const Coloring c(k, colors);
    const VertexId s = static_cast<VertexId>(rng.below(g.num_vertices()));
    if (k < 2) continue;
    Color other = 1 + static_cast<Color>(rng.below(k));
    if (other == colors[s]) other = other == k ? 1 : other + 1;
    const auto comp = kempe_component(g, c, s, colors[s], other);
    const std::set<VertexId> got(comp.members.begin(), comp.members.end());
    EXPECT_EQ(got, brute::two_color_component(g, colors, s, colors[s], other));
    EXPECT_EQ(got.size(), comp.members.size());

    std::size_t ends = 0;
    std::size_t edges = 0;
    for (VertexId u : got) {
      std::size_t internal = 0;
      for (VertexId w : g.neighbors(u)) internal += got.contains(w);
      edges += internal;
      ends += internal <= 1;
    }
    edges /= 2;
    bool path_shape = edges + 1 == got.size();
    for (VertexId u : got) {
      std::size_t internal = 0;
      for (VertexId w : g.neighbors(u)) internal += got.contains(w);
      path_shape = path_shape && internal <= 2;
    }
    EXPECT_EQ(comp.is_simple_path, path_shape);
    if (path_shape) {
      EXPECT_EQ(comp.endpoints.size(), got.size() == 1 ? 1u : 2u);
    }
  }
}

TEST(Serialization, JsonAndLinesRoundTrip) {
  const Coloring c(3, {1, 2, 3, 1});
  EXPECT_EQ(brute::colors_of(parse_coloring(coloring_to_json(c), 4)), brute::colors_of(c));
  EXPECT_EQ(brute::colors_of(parse_coloring(coloring_to_lines(c), 4)), brute::colors_of(c));
  EXPECT_EQ(parse_coloring("{\"palette\":3,\"colors\":[1,2,1]}", 3).colors().size(), 3u);
  EXPECT_THROW(parse_coloring("nonsense", 3), ColoringError);
}

}  // namespace
