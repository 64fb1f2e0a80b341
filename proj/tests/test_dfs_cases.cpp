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

#include <numeric>

#include "brooks/dfs_cases.hpp"
#include "brooks/testkit/cases.hpp"
#include "brooks/testkit/generators.hpp"
#include "brooks/testkit/oracle.hpp"
#include "support/brute.hpp"

namespace {

using namespace brooks;

std::vector<VertexId> all_of(const Graph& g) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

// Brute scan for the start triple: smallest v, then the lexicographically
// first non-adjacent pair of its neighbors.
std::optional<StartTriple> brute_triple(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) return StartTriple{v, nb[i], nb[j]};
      }
    }
  }
  return std::nullopt;
}

TEST(ChooseVxy, Examples) {
  for (const char* name : {"k33", "prism", "petersen"}) {
    const Graph g = testkit::named_graph(name);
    const auto t = choose_v_x_y(g, all_of(g));
    const auto b = brute_triple(g);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(t.v, b->v) << name;
    EXPECT_EQ(t.x, b->x) << name;
    EXPECT_EQ(t.y, b->y) << name;
  }
  const Graph k33 = testkit::named_graph("k33");
  const auto t = choose_v_x_y(k33, all_of(k33));
  EXPECT_EQ(t.v, 0u);
  EXPECT_EQ(t.x, 3u);
  EXPECT_EQ(t.y, 4u);
  const Graph k4 = testkit::named_graph("k4");
  EXPECT_THROW(choose_v_x_y(k4, all_of(k4)), InternalAssertion);
}

TEST(FirstBranching, PathAndStar) {
  const Graph path = Graph::build(4, EdgeList{{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(find_first_branching(dfs(path, 0)).has_value());

  const Graph star = Graph::build(5, EdgeList{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto b = find_first_branching(dfs(star, 0));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->p, 0u);
  EXPECT_EQ(b->s, 1u);
  EXPECT_EQ(b->t, 2u);
}

TEST(FirstBranching, MatchesChildCountScan) {
  for (const char* name : {"prism", "petersen", "k33"}) {
    const Graph g = testkit::named_graph(name);
    const DfsTree t = dfs(g, 0);
    std::optional<VertexId> expect;
    for (VertexId u : t.order) {
      std::size_t kids = 0;
      for (VertexId w = 0; w < g.num_vertices(); ++w) kids += t.parent[w] == u && w != t.root;
      if (kids >= 2) {
        expect = u;
        break;
      }
    }
    const auto b = find_first_branching(t);
    EXPECT_EQ(b.has_value(), expect.has_value()) << name;
    if (b) {
      EXPECT_EQ(b->p, *expect) << name;
    }
  }
}

TEST(HamPath, K33) {
  const Graph g = testkit::named_graph("k33");
  const DfsCaseState plan = plan_regular_dfs(g);
  ASSERT_EQ(plan.case_tag, DfsCase::kHamPath);
  const Coloring c = case1_color_ham_path(g, plan.tree.order, plan.start.v, plan.start.x,
                                          plan.start.y, 3);
  EXPECT_TRUE(validate_coloring(g, c, true).ok());
  EXPECT_EQ(c[plan.start.x], 1u);
  EXPECT_EQ(c[plan.start.y], 1u);
}

TEST(HamPath, LastVertexAsZ) {
  // C6 plus its long diagonals, path 0..5, v = 1, x = 0, y = 2: z = 4 sits
  // inside the path.
  const Graph g = Graph::build(
      6, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}});
  const std::vector<VertexId> path{0, 1, 2, 3, 4, 5};
  const Coloring c = case1_color_ham_path(g, path, 1, 0, 2, 3);
  EXPECT_TRUE(validate_coloring(g, c, true).ok());

  // Here v's third neighbor is 5, the last path vertex.
  const Graph h = Graph::build(
      6, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {0, 3}, {2, 5}, {0, 4}});
  ASSERT_EQ(h.max_degree(), 3u);
  const Coloring d = case1_color_ham_path(h, path, 1, 0, 2, 3);
  EXPECT_TRUE(validate_coloring(h, d, true).ok());
}

TEST(HamPath, BadPathAsserts) {
  const Graph g = testkit::named_graph("k33");
  const std::vector<VertexId> path{0, 3, 1};
  EXPECT_THROW(case1_color_ham_path(g, path, 3, 0, 1, 3), InternalAssertion);
}

TEST(Split, Bowtie) {
  const Graph g = Graph::build(5, EdgeList{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const Coloring c = case2a_split_color(g, all_of(g), 2, 3);
  EXPECT_TRUE(validate_coloring(g, c, true).ok());
  EXPECT_EQ(brute::chromatic(g), 3u);
}

TEST(Split, TripodAlignsAllThreeSides) {
  // Center 0 joined to one vertex of each of three triangles.
  const Graph g = Graph::build(10, EdgeList{{0, 1}, {0, 4}, {0, 7}, {1, 2}, {1, 3}, {2, 3},
                                            {4, 5}, {4, 6}, {5, 6}, {7, 8}, {7, 9}, {8, 9}});
  const auto sides = brute::sides_without(g, all_of(g), 0);
  ASSERT_EQ(sides.size(), 3u);
  RunLog log;
  log.tracing = true;
  const Coloring c = case2a_split_color(g, all_of(g), 0, 3, &log);
  EXPECT_TRUE(validate_coloring(g, c, true).ok());
  std::size_t side_events = 0;
  for (const auto& e : log.trace) side_events += e.step == "case2a_split";
  EXPECT_EQ(side_events, 3u);
}

TEST(Split, NonCutThrows) {
  const Graph g = testkit::named_graph("petersen");
  try {
    case2a_split_color(g, all_of(g), 0, 3);
    FAIL();
  } catch (const ColoringError& e) {
    EXPECT_EQ(e.kind(), ColoringError::Kind::kNotSeparation);
  }
}

TEST(PairRemoval, PetersenPlan) {
  const Graph g = testkit::named_graph("petersen");
  const DfsCaseState plan = plan_regular_dfs(g);
  RunLog log;
  const Coloring c = color_regular_dfs(g, all_of(g), log);
  EXPECT_TRUE(validate_coloring(g, c, true).ok());
  EXPECT_LE(c.colors_used(), 3u);
  if (plan.case_tag == DfsCase::kPairRemoval) {
    EXPECT_TRUE(log.reached(Branch::kPairRemoval));
    const auto& b = *plan.branching;
    EXPECT_FALSE(g.adjacent(b.s, b.t));
    EXPECT_EQ(c[b.s], 1u);
    EXPECT_EQ(c[b.t], 1u);
  }
}

TEST(PairRemoval, AdjacentSiblingsAssert) {
  const Graph g = testkit::named_graph("prism");
  EXPECT_THROW(case2b_remove_pair_color(g, all_of(g), 0, 1, 2, 3), InternalAssertion);
}

TEST(DfsColor, Examples) {
  for (const char* name : {"petersen", "k33", "prism"}) {
    const Graph g = testkit::named_graph(name);
    RunLog log;
    const Coloring c = color_regular_dfs(g, all_of(g), log);
    EXPECT_TRUE(validate_coloring(g, c, true).ok()) << name;
    EXPECT_LE(c.colors_used(), 3u) << name;
  }
}

class DfsBranch : public ::testing::TestWithParam<Branch> {};

TEST_P(DfsBranch, CaseInstanceReachesBranch) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = testkit::generate_case_instance(GetParam(), seed);
    const Graph& g = inst.graph;
    RunLog log;
    const Coloring c = color_regular_dfs(g, all_of(g), log);
    const bool hit = log.reached(GetParam()) ||
                     (GetParam() == Branch::kSplit && log.reached(Branch::kSplitAtRoot));
    EXPECT_TRUE(hit);
    EXPECT_TRUE(validate_coloring(g, c, true).ok());
    EXPECT_LE(c.colors_used(), g.max_degree());
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, DfsBranch,
                         ::testing::Values(Branch::kHamPath, Branch::kSplit, Branch::kPairRemoval),
                         [](const auto& info) { return brute::branch_test_name(info.param); });

TEST(DfsProperty, RandomRegularAndBridgedGraphs) {
  Rng rng(31337);
  int runs = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t d = 3 + rng.below(4);
    std::size_t n = d + 2 + rng.below(60);
    if (n * d % 2) ++n;
    const Graph g = testkit::random_regular(n, d, rng.next());
    if (brute::components(g).size() != 1) continue;
    ++runs;
    RunLog log;
    const Coloring c = color_regular_dfs(g, all_of(g), log);
    ASSERT_TRUE(validate_coloring(g, c, true).ok());
    EXPECT_LE(c.colors_used(), d);
  }
  EXPECT_GT(runs, 500);
}

}  // namespace
