// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_TRANSFORMS_HPP
#define QAMP_TRANSFORMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qamp/linear_op.hpp"
#include "qamp/types.hpp"

namespace qamp {

/// Total boolean function over basis indices, stored as an explicit bit
/// array so traces and query counts stay deterministic and serializable.
class Predicate {
 public:
  Predicate(std::uint64_t dim, std::vector<std::uint8_t> bits);

  static Predicate none(std::uint64_t dim);
  static Predicate single(std::uint64_t dim, BasisIndex marked);
  static Predicate from_function(std::uint64_t dim,
                                 const std::function<bool(BasisIndex)>& f);

  std::uint64_t dim() const { return bits_.size(); }
  bool operator()(BasisIndex x) const { return bits_[x] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Sparse map basis index -> rotation angle (radians); unmapped states
/// get angle 0.
using PhaseSpec = std::map<BasisIndex, double>;

/// The 2x2 gate (1/sqrt2) [[1, 1], [1, -1]].
Mat2 m_gate();

/// n-fold tensor of m_gate as a Sequence of per-qubit applications;
/// dim 2^n.
LinearOp walsh_hadamard(unsigned n);

/// The given 2x2 gate applied to each of n qubits (their tensor product).
LinearOp uniform_single_qubit(unsigned n, const Mat2& gate);

/// Diagonal op with entry e^{i phi(x)}; probability per state unchanged.
LinearOp selective_phase(std::uint64_t dim, const PhaseSpec& spec);

/// Diagonal op with entry -1 where f(x) holds, +1 otherwise.
LinearOp selective_inversion(std::uint64_t dim, const Predicate& f);

/// Convenience: inversion of the single state |t>.
LinearOp selective_inversion(std::uint64_t dim, BasisIndex t);

/// The (n+1)-qubit permutation |x, b> -> |x, f(x) XOR b>, with the
/// ancilla b as the most-significant qubit. With the ancilla prepared in
/// (|0> - |1>)/sqrt2 the induced action on the n-qubit register equals
/// selective_inversion(f).
LinearOp ancilla_oracle(unsigned n, const Predicate& f);

/// [[sqrt(1-1/a), 1/sqrt(a)], [1/sqrt(a), -sqrt(1-1/a)]]; requires a >= 1.
/// a = 2 recovers m_gate, a = 1 is the bit flip.
Mat2 alpha_gate(double alpha);

}  // namespace qamp

#endif  // QAMP_TRANSFORMS_HPP
