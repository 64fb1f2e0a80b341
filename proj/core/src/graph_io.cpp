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
#include <optional>
#include <sstream>

#include "brooks/graph.hpp"

namespace brooks {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

[[noreturn]] void token_error(std::size_t line_no, std::string_view line) {
  throw GraphError(GraphError::Kind::kTokenError,
                   "TokenError(line " + std::to_string(line_no) + "): '" + std::string(line) + "'");
}

}  // namespace

Graph parse_dimacs(std::string_view text, BuildOptions options) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_edges = 0;
  EdgeList edges;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n || tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw GraphError(GraphError::Kind::kMalformedHeader,
                         "MalformedHeader(line " + std::to_string(line_no) + ")");
      }
      const auto nv = to_uint(tokens[2]);
      const auto ne = to_uint(tokens[3]);
      if (!nv || !ne || *nv >= kNoVertex) {
        throw GraphError(GraphError::Kind::kMalformedHeader,
                         "MalformedHeader(line " + std::to_string(line_no) + ")");
      }
      n = *nv;
      declared_edges = *ne;
      return;
    }
    if (tokens[0] == "e") {
      if (!n) {
        throw GraphError(GraphError::Kind::kMalformedHeader,
                         "MalformedHeader: edge before 'p' line " + std::to_string(line_no));
      }
      if (tokens.size() != 3) token_error(line_no, line);
      const auto u = to_uint(tokens[1]);
      const auto v = to_uint(tokens[2]);
      if (!u || !v) token_error(line_no, line);
      if (*u == 0 || *v == 0 || *u > *n || *v > *n) {
        throw GraphError(GraphError::Kind::kVertexOutOfRange,
                         "VertexOutOfRange(line " + std::to_string(line_no) + ")");
      }
      edges.emplace_back(static_cast<VertexId>(*u - 1), static_cast<VertexId>(*v - 1));
      return;
    }
    token_error(line_no, line);
  });
  if (!n) throw GraphError(GraphError::Kind::kMalformedHeader, "MalformedHeader: no 'p' line");
  if (edges.size() != declared_edges) {
    throw GraphError(GraphError::Kind::kEdgeCountMismatch,
                     "EdgeCountMismatch: header says " + std::to_string(declared_edges) +
                         ", found " + std::to_string(edges.size()));
  }
  return Graph::build(static_cast<std::size_t>(*n), edges, options);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text, BuildOptions options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') return;
    if (tokens.size() != 2) token_error(line_no, line);
    const auto a = to_uint(tokens[0]);
    const auto b = to_uint(tokens[1]);
    if (!a || !b) token_error(line_no, line);
    rows.emplace_back(*a, *b);
  });

  // The first row is an "n m" header when it announces exactly the number of
  // rows that follow and every later endpoint fits below n.
  std::optional<std::uint64_t> n;
  std::size_t first_edge = 0;
  if (!rows.empty() && rows[0].second == rows.size() - 1) {
    bool fits = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      fits = fits && rows[i].first < rows[0].first && rows[i].second < rows[0].first;
    }
    if (fits) {
      n = rows[0].first;
      first_edge = 1;
    }
  }
  EdgeList edges;
  std::uint64_t max_id = 0;
  for (std::size_t i = first_edge; i < rows.size(); ++i) {
    if (rows[i].first >= kNoVertex || rows[i].second >= kNoVertex) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange, "VertexOutOfRange");
    }
    max_id = std::max({max_id, rows[i].first + 1, rows[i].second + 1});
    edges.emplace_back(static_cast<VertexId>(rows[i].first),
                       static_cast<VertexId>(rows[i].second));
  }
  return Graph::build(static_cast<std::size_t>(n.value_or(max_id)), edges, options);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace brooks
