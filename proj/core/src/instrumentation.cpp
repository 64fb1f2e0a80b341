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

#include "brooks/instrumentation.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace brooks {

namespace {

constexpr std::array<std::pair<Branch, std::string_view>, 14> kBranchNames{{
    {Branch::kFreeColorAtV, "free-color"},
    {Branch::kNeighborRecolor, "neighbor-recolor"},
    {Branch::kSplitComponents, "split-components"},
    {Branch::kNonPathComponent, "non-path-component"},
    {Branch::kPostNormalization, "post-normalization"},
    {Branch::kThirdColorBreak, "third-color-break"},
    {Branch::kAdjacentPairRecolor, "roles-triangle"},
    {Branch::kFinalDoubleColorSplit, "final-maneuver-(i)"},
    {Branch::kFinalEdgeAbsent, "final-maneuver-(ii-absent)"},
    {Branch::kFinalEdgePresent, "final-maneuver-(ii-present)"},
    {Branch::kHamPath, "ham-path"},
    {Branch::kSplit, "split"},
    {Branch::kSplitAtRoot, "split-at-root"},
    {Branch::kPairRemoval, "pair-removal"},
}};

}  // namespace

Counters& Counters::operator+=(const Counters& other) {
  edges_examined += other.edges_examined;
  kempe_swaps += other.kempe_swaps;
  recolorings += other.recolorings;
  path_edge_examinations += other.path_edge_examinations;
  path_edges += other.path_edges;
  return *this;
}

std::string_view to_string(Branch b) {
  for (const auto& [branch, name] : kBranchNames) {
    if (branch == b) return name;
  }
  return "unknown";
}

std::optional<Branch> branch_from_string(std::string_view name) {
  for (const auto& [branch, branch_name] : kBranchNames) {
    if (branch_name == name) return branch;
  }
  return std::nullopt;
}

bool RunLog::reached(Branch b) const {
  return std::find(branches.begin(), branches.end(), b) != branches.end();
}

InternalAssertion::InternalAssertion(std::string step, std::string detail,
                                     std::vector<TraceEvent> trace)
    : std::runtime_error("InternalAssertion(" + step + "): " + detail),
      step_(std::move(step)),
      detail_(std::move(detail)),
      trace_(std::move(trace)) {}

}  // namespace brooks
