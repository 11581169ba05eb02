// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/statevector.hpp"

#include <cmath>

namespace qamp {

namespace {

double squared_norm(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}

void check_finite(const std::vector<Complex>& amps) {
  for (const Complex& a : amps) {
    require(std::isfinite(a.real()) && std::isfinite(a.imag()),
            "state amplitude is not finite");
  }
}

}  // namespace

StateVector StateVector::basis(std::uint64_t dim, BasisIndex index) {
  require(dim >= 1, "state dimension must be positive");
  require(index < dim, "basis index out of range");
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[index] = Complex(1.0, 0.0);
  return StateVector(std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
  require(!amps.empty(), "state dimension must be positive");
  check_finite(amps);
  double n = std::sqrt(squared_norm(amps));
  require(std::abs(n - 1.0) <= kNormTol, "amplitudes are not normalized");
  return StateVector(std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
  require(!amps.empty(), "state dimension must be positive");
  check_finite(amps);
  double n = std::sqrt(squared_norm(amps));
  require(n > 0.0, "cannot normalize the zero vector");
  for (Complex& a : amps) a /= n;
  return StateVector(std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

double StateVector::probability(BasisIndex x) const {
  require(x < dim(), "basis index out of range");
  return std::norm(amps_[x]);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require(a.dim() == b.dim(), "inner_product: dimension mismatch");
  Complex s(0.0, 0.0);
  for (std::uint64_t x = 0; x < a.dim(); ++x) {
    s += std::conj(a[x]) * b[x];
  }
  return s;
}

}  // namespace qamp
