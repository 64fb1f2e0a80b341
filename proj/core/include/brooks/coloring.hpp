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

#include "brooks/graph.hpp"
#include "brooks/instrumentation.hpp"

namespace brooks {

/// Palette color; 0 is the uncolored sentinel and 1..k are real colors.
using Color = std::uint32_t;

inline constexpr Color kUncolored = 0;

class ColoringError : public std::runtime_error {
 public:
  enum class Kind {
    kNoFreeColor,
    kNoLowDegreeVertex,
    kStartNotInClasses,
    kStaleComponent,
    kVertexNotOnPath,
    kNotSeparation,
    kParse,
  };

  ColoringError(Kind kind, const std::string& what, VertexId vertex = kNoVertex)
      : std::runtime_error(what), kind_(kind), vertex_(vertex) {}

  Kind kind() const noexcept { return kind_; }
  VertexId vertex() const noexcept { return vertex_; }

 private:
  Kind kind_;
  VertexId vertex_;
};

/// Per-vertex color assignment over the palette 1..k.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::size_t n, Color k) : k_(k), colors_(n, kUncolored) {}
  Coloring(Color k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {}

  Color k() const noexcept { return k_; }
  void set_k(Color k) noexcept { k_ = k; }
  std::size_t size() const noexcept { return colors_.size(); }

  Color operator[](VertexId v) const { return colors_[v]; }
  void set(VertexId v, Color c) { colors_[v] = c; }
  bool colored(VertexId v) const { return colors_[v] != kUncolored; }

  std::span<const Color> colors() const noexcept { return colors_; }

  /// Number of distinct non-zero colors on the given vertices.
  std::size_t colors_used(std::span<const VertexId> vertices) const;
  std::size_t colors_used() const;

  bool operator==(const Coloring&) const = default;

 private:
  Color k_ = 0;
  std::vector<Color> colors_;
};

struct ColoringCheck {
  enum class Status { kOk, kViolation, kUncolored, kOutOfPalette };

  Status status = Status::kOk;
  VertexId u = kNoVertex;  // offending vertex, or lower edge endpoint
  VertexId v = kNoVertex;  // upper edge endpoint for violations

  bool ok() const noexcept { return status == Status::kOk; }
  std::string describe() const;
};

/// First offender in ascending vertex order; for each vertex its own state is
/// checked before its edges to higher-numbered neighbors.
ColoringCheck validate_coloring(const Graph& g, const Coloring& c, bool require_total);

/// Reusable stamped color-presence array; queries cost O(deg(v)).
class ColorScratch {
 public:
  explicit ColorScratch(Color k = 0) : stamp_(static_cast<std::size_t>(k) + 1, 0) {}

  /// Stamps the colors present around v. Returns the number of distinct colors.
  std::size_t mark_neighborhood(const Graph& g, const Coloring& c, VertexId v,
                                Counters* counters = nullptr);
  /// Starts an empty color set; fill it with `add`.
  void reset(Color k);
  void add(Color col);
  bool present(Color col) const { return col < stamp_.size() && stamp_[col] == current_; }
  /// Smallest palette color absent from the last marked neighborhood, or 0.
  Color first_missing(Color k) const;

 private:
  void ensure(Color k);

  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
};

/// Palette colors absent from v's neighborhood, ascending.
std::vector<Color> missing_colors(const Graph& g, const Coloring& c, VertexId v);

std::size_t neighbor_color_count(const Graph& g, const Coloring& c, VertexId v, Color col,
                                 Counters* counters = nullptr);

/// Connected component of the subgraph induced by color classes a and b.
struct KempeComponent {
  Color a = kUncolored;
  Color b = kUncolored;
  VertexId start = kNoVertex;
  // DFS preorder from `start` with ascending neighbor order. When the
  // component is a path and `start` is one of its ends this is the path order.
  std::vector<VertexId> members;
  bool is_simple_path = false;
  std::vector<VertexId> endpoints;
  // First member of internal degree > 2 on the walk from `start`; only
  // computed when `start` has at most one internal neighbor.
  std::optional<VertexId> first_branch_from;

  bool contains(VertexId v) const;
};

KempeComponent kempe_component(const Graph& g, const Coloring& c, VertexId start, Color a,
                               Color b, Counters* counters = nullptr);

/// Exchanges a and b on every member of comp.
void kempe_swap(const Graph& g, Coloring& c, const KempeComponent& comp,
                Counters* counters = nullptr);

/// Exchanges a and b on the members of `path` strictly before `upto_exclusive`.
void swap_prefix_on_path(const Graph& g, Coloring& c, std::span<const VertexId> path,
                         VertexId upto_exclusive, Color a, Color b,
                         Counters* counters = nullptr);

// Serialization: {"k": int, "colors": [int]} and "s <vertex> <color>" lines.
std::string coloring_to_json(const Coloring& c);
std::string coloring_to_lines(const Coloring& c);
/// Accepts either serialization above, or a result document carrying a
/// "colors" array. `n` fixes the length for the line format.
Coloring parse_coloring(std::string_view text, std::size_t n);

}  // namespace brooks
