// caeval/rng.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_RNG_HPP_
#define CAEVAL_RNG_HPP_

#include <cstdint>
#include <random>

namespace caeval {

// All randomness in the toolkit flows through these helpers rather than
// the standard distributions, whose output sequences differ between
// standard-library implementations.  mt19937_64 itself is specified
// bit-exactly, so seeded outputs are reproducible everywhere.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent per-utterance stream: corruption of utterance k depends on
/// (seed, k) only, so records can be processed in any order.
inline std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

inline std::mt19937_64 seeded_stream(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_draw(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n); rejection sampling, no modulo bias.
inline std::size_t uniform_index(std::mt19937_64 &rng, std::size_t n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % span);
}

}  // namespace caeval

#endif  // CAEVAL_RNG_HPP_
