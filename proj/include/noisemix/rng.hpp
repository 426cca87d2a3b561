// Copyright 2026 The Noisemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISEMIX_RNG_HPP_
#define NOISEMIX_RNG_HPP_

#include <cstdint>
#include <random>

#include "noisemix/types.hpp"

namespace noisemix {

// SplitMix64 finalizer; a 64-bit bijection with full avalanche.  Used as the
// building block of seed derivation so parallel tasks get decorrelated
// streams from a single master seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// The one random source used everywhere.  The variate scheme is pinned so
// identical seeds reproduce identical streams:
//   * engine: std::mt19937_64 seeded directly with the 64-bit seed value
//     (its output sequence is fixed by the C++ standard),
//   * uniform doubles: top 53 bits of one engine draw, u = (x >> 11) * 2^-53,
//   * gaussians: Box-Muller on (u1, u2] with u1 = ((x >> 11) + 1) * 2^-53
//     so log(u1) is finite; both values of the pair are consumed in order,
//   * bounded integers: 128-bit multiply-high of one draw with the bound
//     (bias < bound / 2^64, negligible for every bound used here).
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal deviate.
  double gaussian();

  // Uniform integer in [0, n).  n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128(next_u64()) * u128(n)) >> 64);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace noisemix

#endif  // NOISEMIX_RNG_HPP_
