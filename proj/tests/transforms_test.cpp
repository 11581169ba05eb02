// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/transforms.hpp"

#include <bit>
#include <cmath>
#include <doctest.h>
#include <random>

#include "qamp/linear_op.hpp"
#include "support/dense_oracle.hpp"

using namespace qamp;
namespace oracle = qamp::testing;

TEST_CASE("m gate maps the basis states to even/odd superpositions") {
  Mat2 m = m_gate();
  const double h = 1.0 / std::sqrt(2.0);
  // columns are images of |0> and |1>
  CHECK(std::abs(m[0] - Complex(h, 0)) < 1e-15);
  CHECK(std::abs(m[2] - Complex(h, 0)) < 1e-15);
  CHECK(std::abs(m[1] - Complex(h, 0)) < 1e-15);
  CHECK(std::abs(m[3] - Complex(-h, 0)) < 1e-15);

  // M * M = I
  LinearOp op = LinearOp::single_qubit(2, 0, m);
  oracle::EMatrix mm = oracle::materialized(op) * oracle::materialized(op);
  CHECK(oracle::max_abs(mm - oracle::EMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("walsh-hadamard: uniform amplitudes and involution") {
  LinearOp w2 = walsh_hadamard(2);
  StateVector v = apply(w2, StateVector::basis(4, 0));
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(std::abs(v[i] - Complex(0.5, 0)) < 1e-15);

  for (unsigned n = 1; n <= 6; ++n) {
    LinearOp w = walsh_hadamard(n);
    oracle::EMatrix m = oracle::materialized(w);
    CHECK(oracle::max_abs(m * m - oracle::EMatrix::Identity(m.rows(), m.cols())) < 1e-10);
  }
}

TEST_CASE("walsh-hadamard sign law: (-1)^{popcount(s AND t)}") {
  // brute-force tensor expansion as the oracle
  for (unsigned n = 1; n <= 6; ++n) {
    const auto dim = 1ULL << n;
    oracle::EMatrix w = oracle::materialized(walsh_hadamard(n));
    oracle::EMatrix m(2, 2);
    const double h = 1.0 / std::sqrt(2.0);
    m << h, h, h, -h;
    oracle::EMatrix ref = oracle::kron_power(m, static_cast<int>(n));
    CHECK(oracle::max_abs(w - ref) < 1e-12);
    const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
    for (std::uint64_t s = 0; s < dim; ++s) {
      for (std::uint64_t t = 0; t < dim; ++t) {
        double sign = (std::popcount(s & t) % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(w(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) -
                       Complex(sign * scale, 0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("selective phase: identity at zero angles, diagonal entries, probabilities") {
  LinearOp id = selective_phase(4, {});
  CHECK(oracle::max_abs(oracle::materialized(id) - oracle::EMatrix::Identity(4, 4)) == 0.0);

  LinearOp d = selective_phase(2, {{0, 0.9}, {1, -0.4}});
  DenseMatrix m = materialize(d);
  CHECK(std::abs(m.at(0, 0) - std::polar(1.0, 0.9)) < 1e-15);
  CHECK(std::abs(m.at(1, 1) - std::polar(1.0, -0.4)) < 1e-15);

  StateVector v = oracle::to_state(oracle::random_state(16, 3));
  StateVector w = apply(selective_phase(16, {{1, 2.0}, {7, 0.1}, {12, -2.8}}), v);
  for (std::uint64_t i = 0; i < 16; ++i) {
    CHECK(std::abs(w.probability(i) - v.probability(i)) < 1e-12);
  }
}

TEST_CASE("selective inversion: signs and involution") {
  CHECK(oracle::max_abs(oracle::materialized(selective_inversion(8, Predicate::none(8))) -
                        oracle::EMatrix::Identity(8, 8)) == 0.0);

  LinearOp inv = selective_inversion(8, 5);
  DenseMatrix m = materialize(inv);
  for (std::uint64_t i = 0; i < 8; ++i) {
    CHECK(std::abs(m.at(i, i) - Complex(i == 5 ? -1.0 : 1.0, 0)) == 0.0);
  }

  Predicate f = Predicate::from_function(8, [](BasisIndex x) { return x % 3 == 0; });
  oracle::EMatrix im = oracle::materialized(selective_inversion(8, f));
  CHECK(oracle::max_abs(im * im - oracle::EMatrix::Identity(8, 8)) < 1e-15);
}

TEST_CASE("ancilla oracle: trivial predicate, kickback equivalence, register action") {
  CHECK(oracle::max_abs(oracle::materialized(ancilla_oracle(3, Predicate::none(8))) -
                        oracle::EMatrix::Identity(16, 16)) == 0.0);

  // With the ancilla in (|0> - |1>)/sqrt2, the register sees
  // selective_inversion(f). Exhaustive over random predicates, n <= 6.
  std::mt19937 gen(1234);
  for (unsigned n = 2; n <= 6; ++n) {
    const std::uint64_t dim = 1ULL << n;
    for (unsigned trial = 0; trial < 20; ++trial) {
      std::vector<std::uint8_t> bits(dim);
      for (auto& b : bits) b = static_cast<std::uint8_t>(gen() & 1);
      Predicate f(dim, bits);
      LinearOp orc = ancilla_oracle(n, f);
      LinearOp inv = selective_inversion(dim, f);

      oracle::EVector reg = oracle::random_state(static_cast<int>(dim), gen());
      // |psi> (x) (|0> - |1>)/sqrt2 with the ancilla as the top qubit
      std::vector<Complex> full(2 * dim);
      const double h = 1.0 / std::sqrt(2.0);
      for (std::uint64_t x = 0; x < dim; ++x) {
        full[x] = reg(static_cast<Eigen::Index>(x)) * h;
        full[dim + x] = -reg(static_cast<Eigen::Index>(x)) * h;
      }
      StateVector out = apply(orc, StateVector::from_amplitudes(full));
      StateVector want = apply(inv, oracle::to_state(reg));
      for (std::uint64_t x = 0; x < dim; ++x) {
        // induced register amplitude = sqrt2 * <x, ancilla=0|out>
        CHECK(std::abs(out[x] / h - want[x]) < 1e-12);
        // ancilla stays in its superposition
        CHECK(std::abs(out[dim + x] + out[x]) < 1e-12);
      }
    }
  }

  // n=3, random f: register action materializes to diag((-1)^{f(x)})
  std::vector<std::uint8_t> bits = {1, 0, 0, 1, 1, 0, 1, 0};
  Predicate f(8, bits);
  oracle::EMatrix om = oracle::materialized(ancilla_oracle(3, f));
  // project onto the (|0> - |1>)/sqrt2 ancilla sector: top-left minus
  // the coupling into the flipped sector
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t y = 0; y < 8; ++y) {
      Complex induced = om(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) -
                        om(static_cast<Eigen::Index>(y + 8), static_cast<Eigen::Index>(x));
      Complex want = (x == y) ? Complex(bits[x] ? -1.0 : 1.0, 0) : Complex(0, 0);
      CHECK(std::abs(induced - want) < 1e-12);
    }
  }
}

TEST_CASE("alpha gate: special values and unitarity") {
  Mat2 a2 = alpha_gate(2.0);
  Mat2 m = m_gate();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(a2[i] - m[i]) < 1e-15);

  Mat2 a1 = alpha_gate(1.0);
  CHECK(std::abs(a1[0]) == 0.0);
  CHECK(std::abs(a1[1] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(a1[2] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(a1[3]) == 0.0);

  // alpha = 4: columns orthonormal (direct Gram check)
  Mat2 a4 = alpha_gate(4.0);
  CHECK(std::abs(std::norm(a4[0]) + std::norm(a4[2]) - 1.0) < 1e-15);
  CHECK(std::abs(std::norm(a4[1]) + std::norm(a4[3]) - 1.0) < 1e-15);
  CHECK(std::abs(std::conj(a4[0]) * a4[1] + std::conj(a4[2]) * a4[3]) < 1e-15);

  CHECK_THROWS_AS(alpha_gate(0.5), ContractError);
}

TEST_CASE("constructed transforms pass the unitarity invariant") {
  CHECK(unitarity_defect(walsh_hadamard(5)) <= 1e-10);
  CHECK(unitarity_defect(ancilla_oracle(4, Predicate::single(16, 9))) <= 1e-10);
  CHECK(unitarity_defect(selective_phase(32, {{3, 1.1}, {17, -0.6}})) <= 1e-10);
  CHECK(unitarity_defect(uniform_single_qubit(4, alpha_gate(7.0))) <= 1e-10);
}
