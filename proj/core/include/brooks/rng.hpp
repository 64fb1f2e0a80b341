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
#include <random>
#include <span>
#include <utility>

namespace brooks {

/// Seeded pseudorandom source with stable output on every platform.
///
/// The engine is std::mt19937_64, whose output sequence the standard fixes.
/// The standard distributions are not portable, so bounded integers use
/// rejection sampling on raw 64-bit draws and reals use the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent seed for sub-stream `stream` of `seed`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace brooks
