// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_SAMPLING_HPP
#define QAMP_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "qamp/rng.hpp"
#include "qamp/statevector.hpp"

namespace qamp {

/// One basis-state measurement with probabilities |amps[x]|^2, drawn by
/// inverting the cumulative distribution with a 53-bit uniform deviate.
BasisIndex born_draw(const StateVector& v, Rng& rng);

/// Fraction of `shots` independent measurements that land in
/// `outcomes`. Same seed, same fraction, on every platform.
double born_sample(const StateVector& v, const std::vector<BasisIndex>& outcomes,
                   std::uint64_t shots, std::uint64_t seed);

}  // namespace qamp

#endif  // QAMP_SAMPLING_HPP
