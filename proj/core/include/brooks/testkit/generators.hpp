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
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brooks/graph.hpp"

namespace brooks::testkit {

class GenRetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::runtime_error {
 public:
  explicit UnknownName(const std::string& name) : std::runtime_error("UnknownName(" + name + ")") {}
};

struct GenSpec {
  enum class Kind { kGnp, kRegular, kNamed, kExhaustiveConnected };

  Kind kind = Kind::kGnp;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;
  std::string name;
  std::uint64_t seed = 0;

  static GenSpec gnp(std::size_t n, double p, std::uint64_t seed);
  static GenSpec regular(std::size_t n, std::size_t d, std::uint64_t seed);
  static GenSpec named(std::string name);
};

inline constexpr int kRegularRetryCap = 1000;

/// Gnp, Regular or Named. Pure in (spec, seed).
///
/// Regular graphs come from the pairing model: stubs are matched one random
/// pair at a time, a pair that would form a loop or a repeated edge is redrawn,
/// and a matching that gets stuck restarts from scratch. After
/// kRegularRetryCap restarts GenRetryExhausted is thrown.
Graph generate(const GenSpec& spec);

Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// petersen, prism, bowtie, k33, complete:c (or kc), cycle:c (or cc).
Graph named_graph(std::string_view name);

/// Calls visit for every labeled connected simple graph on n vertices, in
/// increasing order of the edge bitmask. n is at most 8. Returns the count.
std::uint64_t for_each_connected_graph(std::size_t n,
                                       const std::function<void(const Graph&)>& visit);

/// Applies a uniformly random vertex permutation.
Graph relabel(const Graph& g, std::uint64_t seed);

}  // namespace brooks::testkit
