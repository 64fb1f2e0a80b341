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
#include <stdexcept>
#include <string>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks::testkit {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("BudgetExceeded(" + std::to_string(nodes) + ")"), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct OracleOptions {
  std::optional<std::uint64_t> node_budget;
};

/// Exact backtracking. Vertices go in descending-degree order; a vertex may
/// only open the next unused color, so the first one is always 1. Returns a
/// witness on success.
std::optional<Coloring> k_colorable(const Graph& g, Color k, const OracleOptions& options = {});

/// Smallest k with a witness, searched upwards from 1 (0 for the empty graph).
Color chromatic_number(const Graph& g, const OracleOptions& options = {});

}  // namespace brooks::testkit
