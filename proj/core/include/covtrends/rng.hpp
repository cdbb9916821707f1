// SPDX-License-Identifier: Apache-2.0
//
// SplitMix64 (Steele & Lea): a 64-bit mixing generator with a single
// word of state. Every sampling decision in the library flows through
// this generator so that runs are reproducible across platforms; the
// algorithm is restated in the README.

#pragma once

#include <cstdint>

namespace covtrends {

// Stateless SplitMix64 finalizer. Used both as the generator's output
// mix and to derive per-subsystem seeds from the single run seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift with
  // rejection. bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      if (static_cast<std::uint64_t>(m) >= threshold)
        return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [-scale, scale).
  double symmetric(double scale) { return (2.0 * unit() - 1.0) * scale; }

 private:
  std::uint64_t state_;
};

}  // namespace covtrends
