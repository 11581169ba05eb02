// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_LINEAR_OP_HPP
#define QAMP_LINEAR_OP_HPP

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "qamp/statevector.hpp"
#include "qamp/types.hpp"

namespace qamp {

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// Square complex matrix, row-major.
struct DenseMatrix {
  std::uint64_t dim = 0;
  std::vector<Complex> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::uint64_t d) : dim(d), data(d * d) {}

  Complex& at(std::uint64_t r, std::uint64_t c) { return data[r * dim + c]; }
  const Complex& at(std::uint64_t r, std::uint64_t c) const { return data[r * dim + c]; }

  static DenseMatrix identity(std::uint64_t d);
};

/// A unitary operator in one of several structured forms. Every factory
/// validates what it can afford to (unit-modulus diagonals, 2x2 block
/// unitarity, pair disjointness, matching dimensions); full-matrix Gram
/// checks for dense inputs run eagerly up to kDenseValidateCap.
class LinearOp {
 public:
  struct Dense {
    DenseMatrix m;
  };
  struct Diagonal {
    std::vector<Complex> entries;  // each of unit modulus
  };
  struct SingleQubit {
    std::uint64_t dim;  // 2^n
    unsigned qubit;     // qubit 0 is the least-significant bit of the index
    Mat2 m;
  };
  struct PairBlock {
    BasisIndex a, b;
    Mat2 m;  // (new_a, new_b) = m * (old_a, old_b)
  };
  struct PairBlocks {
    std::uint64_t dim;
    std::vector<PairBlock> blocks;  // pairwise disjoint indices; rest identity
  };
  struct Sequence {
    std::vector<LinearOp> steps;  // temporal order: steps[0] is applied first
  };

  static constexpr std::uint64_t kDenseValidateCap = 512;

  static LinearOp dense(DenseMatrix m);
  static LinearOp diagonal(std::vector<Complex> entries);
  static LinearOp single_qubit(std::uint64_t dim, unsigned qubit, const Mat2& m);
  static LinearOp pair_blocks(std::uint64_t dim, std::vector<PairBlock> blocks);
  static LinearOp sequence(std::vector<LinearOp> steps);
  static LinearOp identity(std::uint64_t dim);

  std::uint64_t dim() const { return dim_; }

  using Form = std::variant<Dense, Diagonal, SingleQubit, PairBlocks, Sequence>;
  const Form& form() const { return form_; }

 private:
  LinearOp(Form f, std::uint64_t d) : form_(std::move(f)), dim_(d) {}
  Form form_;
  std::uint64_t dim_;
};

/// op * v. Norm is preserved up to rounding; Sequence elements apply
/// first-to-last.
StateVector apply(const LinearOp& op, const StateVector& v);

/// Conjugate transpose. For Sequence: reversed list of element adjoints.
LinearOp adjoint(const LinearOp& op);

/// Dense matrix whose column x is apply(op, e_x). Throws
/// ResourceLimitError above the cap.
DenseMatrix materialize(const LinearOp& op, std::uint64_t cap = kMaterializeCap);

/// max |(G^dagger G - I)_{rc}| of the materialized matrix; the unitarity
/// defect every constructed operator must keep below kUnitaryTol.
double unitarity_defect(const LinearOp& op, std::uint64_t cap = kMaterializeCap);

/// Deterministic Haar-style random unitary: orthonormalization of a
/// seeded complex Gaussian matrix. Same seed, same matrix, bit for bit.
LinearOp random_unitary(std::uint64_t dim, std::uint64_t seed);

}  // namespace qamp

#endif  // QAMP_LINEAR_OP_HPP
