// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_STATEVECTOR_HPP
#define QAMP_STATEVECTOR_HPP

#include <cstdint>
#include <vector>

#include "qamp/types.hpp"

namespace qamp {

/// A normalized vector of complex amplitudes over a finite basis.
/// Immutable after construction; the squared modulus of amps()[x] is the
/// probability of observing basis state x.
class StateVector {
 public:
  /// The basis state |index> of the given dimension.
  static StateVector basis(std::uint64_t dim, BasisIndex index);

  /// Adopts amplitudes that must already be normalized (within kNormTol).
  static StateVector from_amplitudes(std::vector<Complex> amps);

  /// Rescales arbitrary non-zero amplitudes to unit norm.
  static StateVector normalized(std::vector<Complex> amps);

  std::uint64_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amps() const { return amps_; }
  Complex operator[](BasisIndex x) const { return amps_[x]; }

  double norm() const;
  double probability(BasisIndex x) const;

 private:
  explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}
  std::vector<Complex> amps_;
};

/// Sum over x of conj(a[x]) * b[x]. Dimensions must agree.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace qamp

#endif  // QAMP_STATEVECTOR_HPP
