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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

// Delete-and-repair coloring of a connected Δ-regular, non-complete graph
// (Δ >= 3). One vertex v is removed, the rest is greedily colored with Δ
// colors, and v is re-inserted by a fixed chain of Kempe-chain steps:
//
//   free_color -> choose_roles -> normalize(13, 23, 12)
//     -> third_color_break(13, 12, 23) -> adjacent_pair_recolor
//     -> final_maneuver
//
// Each step either finishes (v receives a color) or establishes the property
// the next step relies on; the chain never loops.
//
// Roles 1, 2, 3 name three neighbors of v. Roles 1 and 3 are non-adjacent.
// The colors carried by the role vertices when roles are fixed are stored in
// `role_color`, so "color i" in the step descriptions means role_color[i-1].
//
// Path-edge counting: once all three role-pair chains are known to be paths,
// every vertex on them is scanned at most once and the scan result is reused
// by later steps. Walks and interchanges along a path use the stored vertex
// sequence and do not dereference edges. `path_edge_examinations` therefore
// counts each path edge at most once from each endpoint.

enum class RolePair { k12 = 0, k13 = 1, k23 = 2 };

enum class StepOutcome { kDone, kContinue };

struct RepairState {
  VertexId v = kNoVertex;
  std::vector<VertexId> neighbors;  // N(v), ascending
  std::array<VertexId, 3> role_vertex{kNoVertex, kNoVertex, kNoVertex};
  std::array<Color, 3> role_color{};
  std::optional<Color> mu;
  std::optional<VertexId> w;
  std::array<std::optional<KempeComponent>, 3> paths;  // indexed by RolePair
  bool roles_assigned = false;
};

class KempeRepair {
 public:
  /// `coloring` must color every vertex except v with colors 1..Δ.
  KempeRepair(const Graph& g, Coloring coloring, VertexId v, RunLog& log);

  StepOutcome step_free_color();
  StepOutcome step_choose_roles();
  StepOutcome step_normalize_pair(RolePair pair);
  StepOutcome step_third_color_break(RolePair pair);
  StepOutcome step_adjacent_pair_recolor();
  StepOutcome step_final_maneuver();

  /// Runs the whole chain and validates the result. Throws InternalAssertion.
  void run();
  /// The remainder of run() once all three pairs are normalized paths.
  void run_from_third_color_break();

  const RepairState& state() const noexcept { return state_; }
  const Coloring& coloring() const noexcept { return coloring_; }
  Coloring take_coloring() { return std::move(coloring_); }

 private:
  struct Scan {
    std::array<std::uint32_t, 3> role_color_count{};
    Color free_color = kUncolored;  // smallest color absent around the vertex, != own
  };

  const Scan& scan(VertexId u);
  void done(const char* step);
  void begin_post_normalization();
  bool is_path_edge(VertexId u, VertexId w) const;
  void recolor(VertexId u, Color col);
  void finish(const char* step, Color col_for_v);
  void check(const char* step);
  [[noreturn]] void fail(const char* step, const std::string& detail);
  Color free_color_other_than(Color own);

  const Graph& g_;
  Coloring coloring_;
  RunLog& log_;
  Color k_;
  RepairState state_;
  ColorScratch scratch_;
  NeighborMarks marks_;

  bool post_normalization_ = false;
  std::array<std::vector<VertexId>, 3> path_pos_;
  std::vector<std::uint32_t> scan_slot_;
  std::vector<Scan> scans_;
};

/// Deletes v and greedily colors every component of g - v with Δ colors; v
/// stays uncolored.
Coloring initial_repair_coloring(const Graph& g, VertexId v, RunLog& log);

/// Colors the connected Δ-regular non-complete component `comp` of g with
/// Δ colors. The returned coloring spans g; vertices outside comp stay 0.
Coloring color_regular_repair(const Graph& g, std::span<const VertexId> comp, RunLog& log);

}  // namespace brooks
