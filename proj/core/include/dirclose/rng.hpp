// Copyright 2026 The dirclose Authors
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
#include <vector>

namespace dirclose {

/// SplitMix64 step. Used to expand and mix seeds for substream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeded random source with platform-independent derived draws.
///
/// std::mt19937_64 raw output is fully specified by the standard; the bounded
/// and floating-point draws below are implemented on top of the raw stream so
/// that a given seed produces identical sequences on every platform. The
/// standard distributions are deliberately not used: their output is
/// implementation-defined and would break bit-reproducibility of experiments.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

  std::uint64_t seed() const { return seed_; }

  /// Raw 64 random bits.
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be >= 1. Unbiased (rejection).
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1), 53 bits of precision.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in the open interval (0, 1).
  double uniform01_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Fisher-Yates shuffle using this source's bounded draws.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Derives an independent deterministic substream. Streams with distinct
  /// (a, b) pairs are decorrelated regardless of how much the parent is used.
  Rng substream(std::uint64_t a, std::uint64_t b = 0) const {
    std::uint64_t s = seed_ ^ (a * 0x9e3779b97f4a7c15ULL);
    splitmix64(s);
    s ^= b * 0xd1b54a32d192ed03ULL;
    splitmix64(s);
    return Rng(s);
  }

 private:
  static std::uint64_t mix_seed(std::uint64_t seed) {
    // One mixing round so that small consecutive seeds give unrelated states.
    return splitmix64(seed);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dirclose
