// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_AMPLIFY_HPP
#define QAMP_AMPLIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qamp/linear_op.hpp"
#include "qamp/statevector.hpp"
#include "qamp/types.hpp"

namespace qamp {

/// The (U, s, t) triple the amplification engine works on. s = t is
/// allowed (both statistics estimators use it).
struct AmplificationProblem {
  LinearOp u;
  BasisIndex s;
  BasisIndex t;

  AmplificationProblem(LinearOp u_, BasisIndex s_, BasisIndex t_);
};

/// <t|U|s> and the quantities derived from it. theta = arcsin|u_ts| is
/// the exact per-iteration rotation angle; eta_opt maximizes
/// sin^2((2*eta + 1) * theta).
struct CouplingReport {
  Complex u_ts;
  double magnitude = 0.0;
  double theta = 0.0;
  std::uint64_t eta_opt = 0;
};

/// Per-iteration projections of the iterate onto the invariant plane.
/// a_t is the component along U^-1|t> (which a trailing application of U
/// turns into the target amplitude); a_s is the component along the
/// start direction orthonormalized against it, so that
/// |a_s|^2 + |a_t|^2 + residual^2 = 1 holds exactly.
struct TraceRow {
  Complex a_s;
  Complex a_t;
  double residual = 0.0;
};

struct IterationTrace {
  std::vector<TraceRow> rows;  // rows[j] describes the state after j iterations
};

struct RunOptions {
  bool want_trace = false;
  bool apply_final_u = true;  // trailing single application of U
};

struct RunResult {
  StateVector state;
  IterationTrace trace;
  Complex amp_t;       // <t|state>
  double prob_t = 0.0; // |amp_t|^2
};

/// The iterate Q = -I_s U^-1 I_t U as a Sequence in temporal order:
/// U, then I_t, then U^-1, then -I_s (the global -1 folded into the
/// I_s diagonal).
LinearOp build_q(const AmplificationProblem& p);

/// Q with U replaced by the composition "U then V" (the rotated-target
/// generalization): temporal order U, V, I_t, V^-1, U^-1, -I_s.
LinearOp build_q_rotated(const AmplificationProblem& p, const LinearOp& v);

/// Throws ZeroCouplingError when |<t|U|s>| <= kZeroCouplingTol.
CouplingReport coupling(const AmplificationProblem& p);

/// Starts at |s>, applies Q eta times, then (by default) U once.
/// With the trailing U, the probability on t after j iterations is
/// exactly sin^2((2j + 1) * theta).
RunResult run(const AmplificationProblem& p, std::uint64_t eta,
              const RunOptions& opts = {});

/// The approximate 2x2 matrix of Q on the invariant plane, in the basis
/// (v_s, U^-1 v_t): [[1 - 4|u|^2, 2u], [-2 conj(u), 1]]. Row i is the
/// expansion of Q applied to basis vector i.
Mat2 two_by_two(Complex u_ts);

/// Temporal composition of a gate list (first element applied first).
LinearOp compose_algorithm(std::vector<LinearOp> gates);

/// The inverse circuit: adjoints in reversed order.
LinearOp invert_algorithm(const LinearOp& alg);

struct GeneralAmplification {
  CouplingReport coupling;
  double initial_prob = 0.0;  // |<t|alg|s>|^2, one application of alg
  RunResult result;           // after eta_opt iterations + final alg
  std::uint64_t eta_used = 0;
};

/// Amplifies an arbitrary composed circuit toward (s, t) at eta_opt.
GeneralAmplification amplify_general(const LinearOp& alg, BasisIndex s, BasisIndex t,
                                     const RunOptions& opts = {});

}  // namespace qamp

#endif  // QAMP_AMPLIFY_HPP
