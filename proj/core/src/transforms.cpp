// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/transforms.hpp"

#include <bit>
#include <cmath>

namespace qamp {

Predicate::Predicate(std::uint64_t dim, std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  require(dim >= 1, "predicate dimension must be positive");
  require(bits_.size() == dim, "predicate bit-array length must equal dim");
}

Predicate Predicate::none(std::uint64_t dim) {
  return Predicate(dim, std::vector<std::uint8_t>(dim, 0));
}

Predicate Predicate::single(std::uint64_t dim, BasisIndex marked) {
  require(marked < dim, "marked state out of range");
  std::vector<std::uint8_t> bits(dim, 0);
  bits[marked] = 1;
  return Predicate(dim, std::move(bits));
}

Predicate Predicate::from_function(std::uint64_t dim,
                                   const std::function<bool(BasisIndex)>& f) {
  std::vector<std::uint8_t> bits(dim, 0);
  for (std::uint64_t x = 0; x < dim; ++x) bits[x] = f(x) ? 1 : 0;
  return Predicate(dim, std::move(bits));
}

Mat2 m_gate() {
  const double h = 1.0 / std::sqrt(2.0);
  return {Complex(h, 0), Complex(h, 0), Complex(h, 0), Complex(-h, 0)};
}

LinearOp uniform_single_qubit(unsigned n, const Mat2& gate) {
  require(n >= 1 && n <= 24, "qubit count out of range");
  std::vector<LinearOp> steps;
  steps.reserve(n);
  const std::uint64_t dim = 1ULL << n;
  for (unsigned q = 0; q < n; ++q) {
    steps.push_back(LinearOp::single_qubit(dim, q, gate));
  }
  return LinearOp::sequence(std::move(steps));
}

LinearOp walsh_hadamard(unsigned n) { return uniform_single_qubit(n, m_gate()); }

LinearOp selective_phase(std::uint64_t dim, const PhaseSpec& spec) {
  std::vector<Complex> entries(dim, Complex(1.0, 0.0));
  for (const auto& [x, phi] : spec) {
    require(x < dim, "phase spec index out of range");
    entries[x] = std::polar(1.0, phi);
  }
  return LinearOp::diagonal(std::move(entries));
}

LinearOp selective_inversion(std::uint64_t dim, const Predicate& f) {
  require(f.dim() == dim, "predicate dimension mismatch");
  std::vector<Complex> entries(dim, Complex(1.0, 0.0));
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (f(x)) entries[x] = Complex(-1.0, 0.0);
  }
  return LinearOp::diagonal(std::move(entries));
}

LinearOp selective_inversion(std::uint64_t dim, BasisIndex t) {
  return selective_inversion(dim, Predicate::single(dim, t));
}

LinearOp ancilla_oracle(unsigned n, const Predicate& f) {
  const std::uint64_t reg_dim = 1ULL << n;
  require(f.dim() == reg_dim, "predicate dimension must be 2^n");
  // |x, b> -> |x, f(x) XOR b>: a swap of (x, x + 2^n) wherever f holds.
  std::vector<LinearOp::PairBlock> blocks;
  const Mat2 flip = {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)};
  for (std::uint64_t x = 0; x < reg_dim; ++x) {
    if (f(x)) blocks.push_back({x, reg_dim + x, flip});
  }
  return LinearOp::pair_blocks(reg_dim * 2, std::move(blocks));
}

Mat2 alpha_gate(double alpha) {
  require(std::isfinite(alpha), "alpha must be finite");
  if (alpha < 1.0) throw ContractError("alpha must be >= 1");
  const double stay = std::sqrt(1.0 - 1.0 / alpha);
  const double flip = 1.0 / std::sqrt(alpha);
  return {Complex(stay, 0), Complex(flip, 0), Complex(flip, 0), Complex(-stay, 0)};
}

}  // namespace qamp
