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
#include <string_view>
#include <vector>

namespace brooks {

/// Work counters shared by every algorithm run.
///
/// `edges_examined` counts adjacency-list dereferences made by the algorithms
/// (validation passes are not counted). `path_edge_examinations` and
/// `path_edges` are only populated by the Kempe repair once its three paths
/// are fixed: the first counts dereferences of edges lying on those paths,
/// the second is the number of such edges.
struct Counters {
  std::uint64_t edges_examined = 0;
  std::uint64_t kempe_swaps = 0;
  std::uint64_t recolorings = 0;
  std::uint64_t path_edge_examinations = 0;
  std::uint64_t path_edges = 0;

  Counters& operator+=(const Counters& other);
};

/// Proof branches an algorithm run can finish in or pass through.
enum class Branch {
  // Kempe repair (delete one vertex, color the rest, re-insert).
  kFreeColorAtV,
  kNeighborRecolor,
  kSplitComponents,
  kNonPathComponent,
  kPostNormalization,
  kThirdColorBreak,
  kAdjacentPairRecolor,
  kFinalDoubleColorSplit,
  kFinalEdgeAbsent,
  kFinalEdgePresent,
  // DFS case analysis.
  kHamPath,
  kSplit,
  kSplitAtRoot,
  kPairRemoval,
};

std::string_view to_string(Branch b);
std::optional<Branch> branch_from_string(std::string_view name);

struct TraceEvent {
  std::string step;
  std::string detail;
};

/// Per-run bookkeeping handed to the algorithms.
struct RunLog {
  Counters counters;
  std::vector<Branch> branches;
  std::vector<TraceEvent> trace;
  bool tracing = false;
  // Run a full coloring validation after every mutating step.
#ifdef NDEBUG
  bool check_steps = false;
#else
  bool check_steps = true;
#endif

  void event(std::string step, std::string detail) {
    if (tracing) trace.push_back({std::move(step), std::move(detail)});
  }
  void hit(Branch b) { branches.push_back(b); }
  bool reached(Branch b) const;
};

/// A step of a constructive argument did not find what the argument promises.
class InternalAssertion : public std::runtime_error {
 public:
  InternalAssertion(std::string step, std::string detail, std::vector<TraceEvent> trace = {});

  const std::string& step() const noexcept { return step_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }

 private:
  std::string step_;
  std::string detail_;
  std::vector<TraceEvent> trace_;
};

}  // namespace brooks
