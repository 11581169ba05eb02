// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_RNG_HPP
#define QAMP_RNG_HPP

#include <cstdint>

namespace qamp {

/// SplitMix64 generator (Steele, Lea & Flood). Chosen because the whole
/// algorithm fits in a dozen lines of integer arithmetic, so identical
/// seeds produce identical streams on every platform, which the
/// reproducibility contract of every sampler in this library relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); unbiased via rejection.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal deviate (Box-Muller; pairs are cached).
  double gaussian();

  /// Decorrelated seed for sub-stream `stream` of a run seeded with
  /// `seed` (stage seeds, repeated trials, ...).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qamp

#endif  // QAMP_RNG_HPP
