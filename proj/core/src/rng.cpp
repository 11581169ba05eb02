// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/rng.hpp"

#include <cmath>
#include <numbers>

namespace qamp {

std::uint64_t Rng::below(std::uint64_t n) {
  // Lemire-style rejection on the top bits: unbiased for any n.
  const std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from zero so log stays finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  Rng mix(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return mix.next_u64();
}

}  // namespace qamp
