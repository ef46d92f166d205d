#pragma once

#include <cstdint>
#include <vector>

#include "abbvloc/linalg.hpp"

namespace abbvloc {

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Draws entries uniformly from {±1, ±2, ±3, ±5, ±7, ±1/2, ±1/3}.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational small_rational();
  /// Positive entry from the same pool.
  Rational small_positive();
  Vector vector(std::size_t dim);
  Covector covector(std::size_t dim);
  /// `count` pairwise distinct positive rationals p/q, 1 <= p <= 24, 1 <= q <= 6.
  std::vector<Rational> distinct_positive(std::size_t count);

  SplitMix64& rng() { return rng_; }

 private:
  SplitMix64 rng_;
};

}  // namespace abbvloc
