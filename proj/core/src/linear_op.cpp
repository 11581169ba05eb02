// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/linear_op.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "qamp/rng.hpp"

namespace qamp {

namespace {

void check_finite(const Complex& z, const char* what) {
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), what);
}

// Unitarity of a 2x2 block: columns orthonormal.
double mat2_defect(const Mat2& m) {
  double c0 = std::norm(m[0]) + std::norm(m[2]);
  double c1 = std::norm(m[1]) + std::norm(m[3]);
  Complex cross = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
  double d = std::max(std::abs(c0 - 1.0), std::abs(c1 - 1.0));
  return std::max(d, std::abs(cross));
}

void validate_mat2(const Mat2& m) {
  for (const Complex& z : m) check_finite(z, "matrix entry is not finite");
  require(mat2_defect(m) <= kUnitaryTol, "2x2 block is not unitary");
}

Mat2 mat2_adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

void apply_in_place(const LinearOp& op, std::vector<Complex>& v);

struct ApplyVisitor {
  std::vector<Complex>& v;

  void operator()(const LinearOp::Dense& f) const {
    const DenseMatrix& m = f.m;
    std::vector<Complex> out(m.dim, Complex(0.0, 0.0));
    for (std::uint64_t r = 0; r < m.dim; ++r) {
      Complex acc(0.0, 0.0);
      const Complex* row = &m.data[r * m.dim];
      for (std::uint64_t c = 0; c < m.dim; ++c) acc += row[c] * v[c];
      out[r] = acc;
    }
    v = std::move(out);
  }

  void operator()(const LinearOp::Diagonal& f) const {
    for (std::uint64_t x = 0; x < v.size(); ++x) v[x] *= f.entries[x];
  }

  void operator()(const LinearOp::SingleQubit& f) const {
    // Pair indices that differ only in bit `qubit`.
    const std::uint64_t mask = 1ULL << f.qubit;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t hi = ~lo;
    const std::uint64_t half = f.dim >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
      std::uint64_t i0 = ((i & hi) << 1) | (i & lo);
      std::uint64_t i1 = i0 | mask;
      Complex a = v[i0], b = v[i1];
      v[i0] = f.m[0] * a + f.m[1] * b;
      v[i1] = f.m[2] * a + f.m[3] * b;
    }
  }

  void operator()(const LinearOp::PairBlocks& f) const {
    for (const LinearOp::PairBlock& blk : f.blocks) {
      Complex a = v[blk.a], b = v[blk.b];
      v[blk.a] = blk.m[0] * a + blk.m[1] * b;
      v[blk.b] = blk.m[2] * a + blk.m[3] * b;
    }
  }

  void operator()(const LinearOp::Sequence& f) const {
    for (const LinearOp& step : f.steps) apply_in_place(step, v);
  }
};

void apply_in_place(const LinearOp& op, std::vector<Complex>& v) {
  std::visit(ApplyVisitor{v}, op.form());
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::uint64_t d) {
  DenseMatrix m(d);
  for (std::uint64_t i = 0; i < d; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

LinearOp LinearOp::dense(DenseMatrix m) {
  require(m.dim >= 1, "operator dimension must be positive");
  require(m.data.size() == m.dim * m.dim, "dense matrix storage size mismatch");
  for (const Complex& z : m.data) check_finite(z, "matrix entry is not finite");
  std::uint64_t d = m.dim;
  LinearOp op(Form(Dense{std::move(m)}), d);
  if (d <= kDenseValidateCap) {
    require(unitarity_defect(op) <= kUnitaryTol, "dense matrix is not unitary");
  }
  return op;
}

LinearOp LinearOp::diagonal(std::vector<Complex> entries) {
  require(!entries.empty(), "operator dimension must be positive");
  for (const Complex& z : entries) {
    check_finite(z, "diagonal entry is not finite");
    require(std::abs(std::norm(z) - 1.0) <= kUnitaryTol,
            "diagonal entry is not of unit modulus");
  }
  std::uint64_t d = entries.size();
  return LinearOp(Form(Diagonal{std::move(entries)}), d);
}

LinearOp LinearOp::single_qubit(std::uint64_t dim, unsigned qubit, const Mat2& m) {
  require(dim >= 2 && std::has_single_bit(dim), "dimension must be a power of two");
  require((1ULL << qubit) < dim, "qubit index out of range");
  validate_mat2(m);
  return LinearOp(Form(SingleQubit{dim, qubit, m}), dim);
}

LinearOp LinearOp::pair_blocks(std::uint64_t dim, std::vector<PairBlock> blocks) {
  require(dim >= 1, "operator dimension must be positive");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * blocks.size());
  for (const PairBlock& blk : blocks) {
    require(blk.a < dim && blk.b < dim, "pair index out of range");
    require(blk.a != blk.b, "pair indices must be distinct");
    require(seen.insert(blk.a).second && seen.insert(blk.b).second,
            "pair indices must be pairwise disjoint");
    validate_mat2(blk.m);
  }
  return LinearOp(Form(PairBlocks{dim, std::move(blocks)}), dim);
}

LinearOp LinearOp::sequence(std::vector<LinearOp> steps) {
  require(!steps.empty(), "sequence must contain at least one operator");
  std::uint64_t d = steps.front().dim();
  for (const LinearOp& s : steps) {
    require(s.dim() == d, "sequence elements must share one dimension");
  }
  return LinearOp(Form(Sequence{std::move(steps)}), d);
}

LinearOp LinearOp::identity(std::uint64_t dim) {
  return diagonal(std::vector<Complex>(dim, Complex(1.0, 0.0)));
}

StateVector apply(const LinearOp& op, const StateVector& v) {
  require(op.dim() == v.dim(), "apply: dimension mismatch");
  std::vector<Complex> amps = v.amps();
  apply_in_place(op, amps);
  return StateVector::from_amplitudes(std::move(amps));
}

namespace {

struct AdjointVisitor {
  LinearOp operator()(const LinearOp::Dense& f) const {
    DenseMatrix out(f.m.dim);
    for (std::uint64_t r = 0; r < f.m.dim; ++r)
      for (std::uint64_t c = 0; c < f.m.dim; ++c)
        out.at(r, c) = std::conj(f.m.at(c, r));
    return LinearOp::dense(std::move(out));
  }
  LinearOp operator()(const LinearOp::Diagonal& f) const {
    std::vector<Complex> entries(f.entries.size());
    for (std::uint64_t x = 0; x < entries.size(); ++x)
      entries[x] = std::conj(f.entries[x]);
    return LinearOp::diagonal(std::move(entries));
  }
  LinearOp operator()(const LinearOp::SingleQubit& f) const {
    return LinearOp::single_qubit(f.dim, f.qubit, mat2_adjoint(f.m));
  }
  LinearOp operator()(const LinearOp::PairBlocks& f) const {
    std::vector<LinearOp::PairBlock> blocks = f.blocks;
    for (auto& blk : blocks) blk.m = mat2_adjoint(blk.m);
    return LinearOp::pair_blocks(f.dim, std::move(blocks));
  }
  LinearOp operator()(const LinearOp::Sequence& f) const {
    std::vector<LinearOp> steps;
    steps.reserve(f.steps.size());
    for (auto it = f.steps.rbegin(); it != f.steps.rend(); ++it)
      steps.push_back(adjoint(*it));
    return LinearOp::sequence(std::move(steps));
  }
};

}  // namespace

LinearOp adjoint(const LinearOp& op) {
  return std::visit(AdjointVisitor{}, op.form());
}

DenseMatrix materialize(const LinearOp& op, std::uint64_t cap) {
  if (op.dim() > cap) {
    throw ResourceLimitError("materialize: dimension " + std::to_string(op.dim()) +
                             " exceeds cap " + std::to_string(cap));
  }
  DenseMatrix out(op.dim());
  std::vector<Complex> col(op.dim());
  for (std::uint64_t x = 0; x < op.dim(); ++x) {
    std::fill(col.begin(), col.end(), Complex(0.0, 0.0));
    col[x] = Complex(1.0, 0.0);
    apply_in_place(op, col);
    for (std::uint64_t r = 0; r < op.dim(); ++r) out.at(r, x) = col[r];
  }
  return out;
}

double unitarity_defect(const LinearOp& op, std::uint64_t cap) {
  DenseMatrix g = materialize(op, cap);
  double worst = 0.0;
  // (G^dagger G)_{rc} = sum_k conj(G_{kr}) G_{kc}
  for (std::uint64_t r = 0; r < g.dim; ++r) {
    for (std::uint64_t c = 0; c < g.dim; ++c) {
      Complex acc(0.0, 0.0);
      for (std::uint64_t k = 0; k < g.dim; ++k)
        acc += std::conj(g.at(k, r)) * g.at(k, c);
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

LinearOp random_unitary(std::uint64_t dim, std::uint64_t seed) {
  require(dim >= 1, "operator dimension must be positive");
  Rng rng(seed);
  // Column-major Gaussian draw, then modified Gram-Schmidt with one
  // re-orthogonalization pass.
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (std::uint64_t c = 0; c < dim; ++c)
    for (std::uint64_t r = 0; r < dim; ++r)
      cols[c][r] = Complex(rng.gaussian(), rng.gaussian());

  auto dot = [dim](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s(0.0, 0.0);
    for (std::uint64_t i = 0; i < dim; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };

  for (std::uint64_t c = 0; c < dim; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::uint64_t p = 0; p < c; ++p) {
        Complex proj = dot(cols[p], cols[c]);
        for (std::uint64_t i = 0; i < dim; ++i) cols[c][i] -= proj * cols[p][i];
      }
    }
    double nrm = std::sqrt(std::real(dot(cols[c], cols[c])));
    require(nrm > 1e-12, "random matrix is numerically singular");
    for (std::uint64_t i = 0; i < dim; ++i) cols[c][i] /= nrm;
  }

  DenseMatrix m(dim);
  for (std::uint64_t c = 0; c < dim; ++c)
    for (std::uint64_t r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
  return LinearOp::dense(std::move(m));
}

}  // namespace qamp
