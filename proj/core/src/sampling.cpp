// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "qamp/types.hpp"

namespace qamp {

namespace {

std::vector<double> cumulative_probabilities(const StateVector& v) {
  std::vector<double> cum(v.dim());
  double acc = 0.0;
  for (std::uint64_t x = 0; x < v.dim(); ++x) {
    acc += std::norm(v[x]);
    cum[x] = acc;
  }
  return cum;
}

BasisIndex draw_from(const std::vector<double>& cum, double total, Rng& rng) {
  double u = rng.uniform() * total;
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) --it;  // u == total edge
  return static_cast<BasisIndex>(it - cum.begin());
}

}  // namespace

BasisIndex born_draw(const StateVector& v, Rng& rng) {
  std::vector<double> cum = cumulative_probabilities(v);
  return draw_from(cum, cum.back(), rng);
}

double born_sample(const StateVector& v, const std::vector<BasisIndex>& outcomes,
                   std::uint64_t shots, std::uint64_t seed) {
  require(shots >= 1, "shots must be at least 1");
  std::vector<std::uint8_t> member(v.dim(), 0);
  for (BasisIndex x : outcomes) {
    require(x < v.dim(), "outcome index out of range");
    member[x] = 1;
  }
  std::vector<double> cum = cumulative_probabilities(v);
  const double total = cum.back();
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    if (member[draw_from(cum, total, rng)]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(shots);
}

}  // namespace qamp
