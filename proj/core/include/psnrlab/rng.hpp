// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace psnrlab {

// SplitMix64 (Steele/Lea/Flood). The state walks the 64-bit golden-ratio
// sequence and every output passes through two xor-multiply finalizer
// rounds:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Used instead of any platform generator so that seeded runs are
// reproducible bit-for-bit across compilers, standard libraries, and
// languages.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double strictly inside (0, 1): the top 53 bits of one output,
  // offset by half a step. Never returns 0 or 1, so log(1 - u) is finite.
  double next_open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // The finalizer alone, a bijective 64-bit mix.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Independent stream for (seed, index). Both words are scrambled before
  // combining, so consecutive indices start far apart in state space.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ULL) ^
                      mix(index * 0xBF58476D1CE4E5B9ULL + 1ULL));
  }

private:
  std::uint64_t state_;
};

// Exponential draw with rate lambda by inverse CDF, -ln(1 - u) / lambda.
// Strictly positive because u is strictly inside (0, 1).
inline double exponential_draw(SplitMix64& rng, double lambda) {
  return -std::log1p(-rng.next_open01()) / lambda;
}

} // namespace psnrlab
