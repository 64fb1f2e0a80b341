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

#include "brooks/testkit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <vector>

#include "brooks/rng.hpp"

namespace brooks::testkit {

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UnknownName(std::string(whole));
  }
  return value;
}

Graph complete(std::size_t c) {
  EdgeList edges;
  for (VertexId u = 0; u < c; ++u) {
    for (VertexId v = u + 1; v < c; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(c, edges);
}

Graph cycle(std::size_t c) {
  if (c < 3) throw UnknownName("cycle:" + std::to_string(c));
  EdgeList edges;
  for (VertexId u = 0; u < c; ++u) edges.emplace_back(u, static_cast<VertexId>((u + 1) % c));
  return Graph::build(c, edges);
}

// One matching attempt. Returns false when the remaining stubs admit no legal
// pair.
bool try_pairing(std::size_t n, std::size_t d, Rng& rng, EdgeList& edges) {
  std::vector<VertexId> stubs;
  stubs.reserve(n * d);
  for (VertexId u = 0; u < n; ++u) stubs.insert(stubs.end(), d, u);
  std::vector<std::vector<VertexId>> adj(n);
  edges.clear();

  const auto legal = [&](VertexId a, VertexId b) {
    return a != b && std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end();
  };
  const auto take = [&](std::size_t i, std::size_t j) {
    const VertexId a = stubs[i];
    const VertexId b = stubs[j];
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(std::min(a, b), std::max(a, b));
    // Remove the higher index first so the lower one stays valid.
    if (i < j) std::swap(i, j);
    stubs[i] = stubs.back();
    stubs.pop_back();
    stubs[j] = stubs.back();
    stubs.pop_back();
  };

  while (!stubs.empty()) {
    bool placed = false;
    for (int tries = 0; tries < 64; ++tries) {
      const std::size_t i = rng.below(stubs.size());
      const std::size_t j = rng.below(stubs.size());
      if (i != j && legal(stubs[i], stubs[j])) {
        take(i, j);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    // Many redraws failed: enumerate what is left and pick a legal pair if
    // one exists.
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < stubs.size(); ++i) {
      for (std::size_t j = i + 1; j < stubs.size(); ++j) {
        if (legal(stubs[i], stubs[j])) options.emplace_back(i, j);
      }
    }
    if (options.empty()) return false;
    const auto [i, j] = options[rng.below(options.size())];
    take(i, j);
  }
  return true;
}

}  // namespace

GenSpec GenSpec::gnp(std::size_t n, double p, std::uint64_t seed) {
  GenSpec s;
  s.kind = Kind::kGnp;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

GenSpec GenSpec::regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  GenSpec s;
  s.kind = Kind::kRegular;
  s.n = n;
  s.d = d;
  s.seed = seed;
  return s;
}

GenSpec GenSpec::named(std::string name) {
  GenSpec s;
  s.kind = Kind::kNamed;
  s.name = std::move(name);
  return s;
}

Graph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::kGnp: return gnp(spec.n, spec.p, spec.seed);
    case GenSpec::Kind::kRegular: return random_regular(spec.n, spec.d, spec.seed);
    case GenSpec::Kind::kNamed: return named_graph(spec.name);
    case GenSpec::Kind::kExhaustiveConnected:
      throw std::invalid_argument("exhaustive generation streams; use for_each_connected_graph");
  }
  throw std::invalid_argument("unknown generator kind");
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.coin(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0) {
    throw std::invalid_argument("regular graph needs d < n and n*d even");
  }
  Rng rng(seed);
  EdgeList edges;
  for (int attempt = 0; attempt < kRegularRetryCap; ++attempt) {
    if (try_pairing(n, d, rng, edges)) return Graph::build(n, edges);
  }
  throw GenRetryExhausted("GenRetryExhausted(regular n=" + std::to_string(n) +
                          " d=" + std::to_string(d) + ")");
}

Graph named_graph(std::string_view name) {
  if (name == "petersen") {
    EdgeList edges;
    for (VertexId i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);       // outer cycle
      edges.emplace_back(i, i + 5);             // spokes
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::build(10, edges, {.coalesce_duplicates = true});
  }
  if (name == "prism") {
    const EdgeList edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return Graph::build(6, edges);
  }
  if (name == "bowtie") {
    const EdgeList edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    return Graph::build(5, edges);
  }
  if (name == "k33") {
    EdgeList edges;
    for (VertexId u = 0; u < 3; ++u) {
      for (VertexId v = 3; v < 6; ++v) edges.emplace_back(u, v);
    }
    return Graph::build(6, edges);
  }
  for (std::string_view prefix : {"complete:", "k"}) {
    if (name.starts_with(prefix)) return complete(parse_size(name.substr(prefix.size()), name));
  }
  for (std::string_view prefix : {"cycle:", "c"}) {
    if (name.starts_with(prefix)) return cycle(parse_size(name.substr(prefix.size()), name));
  }
  throw UnknownName(std::string(name));
}

std::uint64_t for_each_connected_graph(std::size_t n,
                                       const std::function<void(const Graph&)>& visit) {
  if (n > 8) throw std::invalid_argument("exhaustive enumeration is limited to n <= 8");
  if (n == 0) return 0;
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> nbr(n);
  EdgeList edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(nbr.begin(), nbr.end(), 0);
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1) {
        nbr[slots[e].first] |= 1u << slots[e].second;
        nbr[slots[e].second] |= 1u << slots[e].first;
      }
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (frontier >> u & 1) next |= nbr[u];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (std::uint32_t{1} << n) - 1) continue;
    edges.clear();
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1) edges.push_back(slots[e]);
    }
    ++count;
    visit(Graph::build(n, edges));
  }
  return count;
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  Rng rng(seed);
  rng.shuffle(std::span<VertexId>(perm));
  EdgeList edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.num_vertices(), edges);
}

}  // namespace brooks::testkit
