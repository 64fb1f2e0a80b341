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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks::testkit {

class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& name)
      : std::runtime_error("SearchExhausted(" + name + ")") {}
};

inline constexpr std::uint64_t kCaseAttemptBudget = 2000000;

/// Branch names accepted by generate_case_instance, repair branches first.
std::vector<Branch> case_branches();

/// True for branches of the delete-and-repair algorithm, false for the DFS
/// cases.
bool is_repair_branch(Branch b);

struct CaseInstance {
  Graph graph;
  std::uint64_t attempts = 0;
};

/// Searches small connected regular non-complete graphs (random d-regular for
/// d in {3, 4, 5}, and cubic graphs with a bridge) until a deterministic run
/// of the matching algorithm reaches `branch`. Runs that raise an internal
/// assertion are skipped. Throws SearchExhausted after kCaseAttemptBudget
/// candidates.
CaseInstance generate_case_instance(Branch branch, std::uint64_t seed);
CaseInstance generate_case_instance(std::string_view name, std::uint64_t seed);

/// Replays the algorithm on g and reports the branches it hit, in order.
std::vector<Branch> replay_branches(const Graph& g, bool repair);

}  // namespace brooks::testkit
