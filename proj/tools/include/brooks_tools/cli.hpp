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
#include <iosfwd>
#include <string>
#include <vector>

#include "brooks/dispatch.hpp"

namespace brooks::cli {

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::string algorithm;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t edges_examined = 0;
  std::uint64_t path_edge_examinations = 0;
  std::uint64_t path_edges = 0;  // not a CSV column; kept for the path bound check
  bool valid = false;
};

struct BenchOptions {
  std::size_t delta = 3;
  std::vector<std::size_t> sizes;
  AlgoChoice algorithm = AlgoChoice::kAuto;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;
};

struct BenchReport {
  std::vector<BenchRow> rows;     // one per (size, repeat), in order
  std::vector<BenchRow> medians;  // one per size
  std::vector<std::string> errors;
};

inline constexpr const char* kBenchHeader =
    "n,m,delta,algorithm,wall_time_ns,edges_examined,path_edge_examinations,valid";

/// Throws AlgorithmFailure when a run produces no valid coloring; generation
/// failures are collected in `errors` and the size is skipped.
BenchReport run_bench(const BenchOptions& options);

/// Header, then the rows of each size followed by its median row.
std::string bench_csv(const BenchReport& report);

/// Entry point of the `brooks` tool. Exit codes: 0 success, 1 invalid
/// coloring (verify), 2 parse or usage error, 3 algorithm failure.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace brooks::cli
