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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

enum class AlgoChoice { kA, kB, kGreedy, kAuto };

std::string_view to_string(AlgoChoice algo);
std::optional<AlgoChoice> parse_algo(std::string_view name);

struct ColorOptions {
  bool trace = false;
#ifdef NDEBUG
  bool check_steps = false;
#else
  bool check_steps = true;
#endif
  // On an InternalAssertion from the chosen regular-graph algorithm, retry the
  // component with the other one. Without it the assertion is fatal.
  bool allow_fallback = true;
  // Relabel vertices with a seeded permutation before coloring. Colors are
  // reported in the caller's labels.
  std::optional<std::uint64_t> relabel_seed;
};

struct ComponentReport {
  std::vector<VertexId> vertices;
  GraphClass graph_class = GraphClass::kTrivialOrSmallDelta;
  std::size_t max_degree = 0;
  std::size_t colors_used = 0;
  std::string algorithm;
};

struct ColorResult {
  Coloring coloring;
  Color palette = 0;
  std::vector<ComponentReport> components;
  Counters instrumentation;
  std::vector<Branch> branches;
  std::vector<TraceEvent> trace;
  std::size_t fallbacks = 0;
  std::vector<std::string> fallback_reasons;
};

/// Every attempt on some component raised an assertion, or the assembled
/// coloring failed the final validation.
class AlgorithmFailure : public std::runtime_error {
 public:
  AlgorithmFailure(const std::string& what, std::vector<std::string> reasons = {})
      : std::runtime_error(what), reasons_(std::move(reasons)) {}

  const std::vector<std::string>& reasons() const noexcept { return reasons_; }

 private:
  std::vector<std::string> reasons_;
};

struct ComponentClassInfo {
  GraphClass graph_class;
  std::size_t size;
  std::size_t max_degree;
};

/// Colors each component needs: c for K_c, 3 for odd cycles, 2 for other
/// cycles and paths, 1 for an isolated vertex, Δ of the component otherwise.
/// The palette is the maximum, 0 for no components.
Color required_palette(std::span<const ComponentClassInfo> classes);

/// Colors every component of g and validates the whole coloring before
/// returning. Components that are neither complete nor odd cycles use at most
/// their maximum degree many colors.
ColorResult color_graph(const Graph& g, AlgoChoice algo, const ColorOptions& options = {});

/// {"palette", "colors", "components", "instrumentation", "fallbacks"} plus
/// "trace" when requested. Deterministic for a fixed result.
std::string to_json(const ColorResult& result, bool include_trace = false);

}  // namespace brooks
