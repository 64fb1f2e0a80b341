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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "brooks/coloring.hpp"
#include "json.hpp"

namespace brooks {

std::size_t Coloring::colors_used(std::span<const VertexId> vertices) const {
  std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
  std::size_t count = 0;
  for (VertexId v : vertices) {
    const Color col = colors_[v];
    if (col == kUncolored) continue;
    if (col >= seen.size()) seen.resize(col + 1, 0);
    if (!seen[col]) {
      seen[col] = 1;
      ++count;
    }
  }
  return count;
}

std::size_t Coloring::colors_used() const {
  std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
  std::size_t count = 0;
  for (Color col : colors_) {
    if (col == kUncolored) continue;
    if (col >= seen.size()) seen.resize(col + 1, 0);
    if (!seen[col]) {
      seen[col] = 1;
      ++count;
    }
  }
  return count;
}

std::string ColoringCheck::describe() const {
  switch (status) {
    case Status::kOk: return "Ok";
    case Status::kViolation:
      return "Violation(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Status::kUncolored: return "Uncolored(" + std::to_string(u) + ")";
    case Status::kOutOfPalette: return "OutOfPalette(" + std::to_string(u) + ")";
  }
  return "Unknown";
}

ColoringCheck validate_coloring(const Graph& g, const Coloring& c, bool require_total) {
  if (c.size() != g.num_vertices()) {
    return {ColoringCheck::Status::kOutOfPalette, static_cast<VertexId>(c.size()), kNoVertex};
  }
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const Color cu = c[u];
    if (cu == kUncolored) {
      if (require_total) return {ColoringCheck::Status::kUncolored, u, kNoVertex};
      continue;
    }
    if (cu > c.k()) return {ColoringCheck::Status::kOutOfPalette, u, kNoVertex};
    for (VertexId w : g.neighbors(u)) {
      if (w > u && c[w] == cu) return {ColoringCheck::Status::kViolation, u, w};
    }
  }
  return {};
}

void ColorScratch::ensure(Color k) {
  if (stamp_.size() < static_cast<std::size_t>(k) + 1) stamp_.resize(k + 1, 0);
}

void ColorScratch::reset(Color k) {
  ensure(k);
  if (++current_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    current_ = 1;
  }
}

void ColorScratch::add(Color col) {
  if (col == kUncolored) return;
  if (col >= stamp_.size()) stamp_.resize(col + 1, 0);
  stamp_[col] = current_;
}

std::size_t ColorScratch::mark_neighborhood(const Graph& g, const Coloring& c, VertexId v,
                                            Counters* counters) {
  reset(c.k());
  std::size_t distinct = 0;
  const auto nbrs = g.neighbors(v);
  for (VertexId w : nbrs) {
    const Color col = c[w];
    if (col == kUncolored) continue;
    if (col >= stamp_.size()) stamp_.resize(col + 1, 0);
    if (stamp_[col] != current_) {
      stamp_[col] = current_;
      ++distinct;
    }
  }
  if (counters) counters->edges_examined += nbrs.size();
  return distinct;
}

Color ColorScratch::first_missing(Color k) const {
  for (Color col = 1; col <= k; ++col) {
    if (!present(col)) return col;
  }
  return kUncolored;
}

std::vector<Color> missing_colors(const Graph& g, const Coloring& c, VertexId v) {
  ColorScratch scratch(c.k());
  scratch.mark_neighborhood(g, c, v);
  std::vector<Color> out;
  for (Color col = 1; col <= c.k(); ++col) {
    if (!scratch.present(col)) out.push_back(col);
  }
  return out;
}

std::size_t neighbor_color_count(const Graph& g, const Coloring& c, VertexId v, Color col,
                                 Counters* counters) {
  const auto nbrs = g.neighbors(v);
  if (counters) counters->edges_examined += nbrs.size();
  return static_cast<std::size_t>(
      std::count_if(nbrs.begin(), nbrs.end(), [&](VertexId w) { return c[w] == col; }));
}

std::string coloring_to_json(const Coloring& c) {
  nlohmann::ordered_json doc;
  doc["k"] = c.k();
  doc["colors"] = std::vector<Color>(c.colors().begin(), c.colors().end());
  return doc.dump();
}

std::string coloring_to_lines(const Coloring& c) {
  std::ostringstream out;
  for (VertexId v = 0; v < c.size(); ++v) out << "s " << v << ' ' << c[v] << '\n';
  return out.str();
}

Coloring parse_coloring(std::string_view text, std::size_t n) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ColoringError(ColoringError::Kind::kParse, std::string("bad coloring JSON: ") + e.what());
    }
    if (!doc.contains("colors") || !doc["colors"].is_array()) {
      throw ColoringError(ColoringError::Kind::kParse, "coloring JSON lacks a 'colors' array");
    }
    std::vector<Color> colors;
    for (const auto& entry : doc["colors"]) {
      if (!entry.is_number_unsigned()) {
        throw ColoringError(ColoringError::Kind::kParse, "non-integer color in 'colors'");
      }
      colors.push_back(entry.get<Color>());
    }
    Color k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    if (doc.contains("k") && doc["k"].is_number_unsigned()) k = doc["k"].get<Color>();
    if (doc.contains("palette") && doc["palette"].is_number_unsigned()) {
      k = doc["palette"].get<Color>();
    }
    if (colors.size() != n) {
      throw ColoringError(ColoringError::Kind::kParse,
                          "coloring has " + std::to_string(colors.size()) +
                              " entries, graph has " + std::to_string(n));
    }
    return Coloring(k, std::move(colors));
  }

  std::vector<Color> colors(n, kUncolored);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Color k = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    std::uint64_t v = 0;
    std::uint64_t col = 0;
    std::string extra;
    if (tag != "s" || !(fields >> v >> col) || (fields >> extra)) {
      throw ColoringError(ColoringError::Kind::kParse,
                          "bad coloring line " + std::to_string(line_no));
    }
    if (v >= n) {
      throw ColoringError(ColoringError::Kind::kParse,
                          "vertex out of range on line " + std::to_string(line_no));
    }
    colors[v] = static_cast<Color>(col);
    k = std::max(k, static_cast<Color>(col));
  }
  return Coloring(k, std::move(colors));
}

}  // namespace brooks
