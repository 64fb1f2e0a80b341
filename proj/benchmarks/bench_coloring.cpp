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

#include <benchmark/benchmark.h>

#include <numeric>

#include "brooks/dispatch.hpp"
#include "brooks/greedy.hpp"
#include "brooks/testkit/generators.hpp"
#include "brooks/testkit/oracle.hpp"

namespace {

using namespace brooks;

ColorOptions fast() {
  ColorOptions o;
  o.check_steps = false;
  return o;
}

template <AlgoChoice Algo>
void BM_ColorCubic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = testkit::random_regular(n, 3, 7);
  const ColorOptions o = fast();
  for (auto _ : state) {
    ColorResult r = color_graph(g, Algo, o);
    benchmark::DoNotOptimize(r.palette);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
  state.counters["vertices/s"] =
      benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ColorCubic<AlgoChoice::kB>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();
BENCHMARK(BM_ColorCubic<AlgoChoice::kA>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_ColorRegularByDegree(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Graph g = testkit::random_regular(20000, d, 3);
  const ColorOptions o = fast();
  for (auto _ : state) {
    ColorResult r = color_graph(g, AlgoChoice::kAuto, o);
    benchmark::DoNotOptimize(r.palette);
  }
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_ColorRegularByDegree)->DenseRange(3, 8);

void BM_GreedyLowDegree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = testkit::gnp(n, 8.0 / static_cast<double>(n), 11);
  const ColorOptions o = fast();
  for (auto _ : state) {
    ColorResult r = color_graph(g, AlgoChoice::kGreedy, o);
    benchmark::DoNotOptimize(r.palette);
  }
}
BENCHMARK(BM_GreedyLowDegree)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_KempeSwap(benchmark::State& state) {
  const Graph g = testkit::random_regular(static_cast<std::size_t>(state.range(0)), 4, 5);
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  Coloring c = color_low_degree_component(g, all, 5);
  for (auto _ : state) {
    const KempeComponent comp = kempe_component(g, c, 0, c[0], c[0] == 1 ? 2 : 1);
    kempe_swap(g, c, comp);
    benchmark::DoNotOptimize(comp.members.size());
  }
}
BENCHMARK(BM_KempeSwap)->RangeMultiplier(8)->Range(1 << 9, 1 << 15);

void BM_OracleChromatic(benchmark::State& state) {
  const Graph g = testkit::gnp(static_cast<std::size_t>(state.range(0)), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(testkit::chromatic_number(g));
}
BENCHMARK(BM_OracleChromatic)->DenseRange(10, 22, 4);

void BM_ParseDimacs(benchmark::State& state) {
  const std::string text = write_dimacs(testkit::random_regular(100000, 3, 1));
  for (auto _ : state) {
    const Graph g = parse_dimacs(text);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDimacs);

}  // namespace

BENCHMARK_MAIN();
