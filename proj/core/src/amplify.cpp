// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/amplify.hpp"

#include <cmath>
#include <numbers>

#include "qamp/transforms.hpp"

namespace qamp {

namespace {

// -I_s as one diagonal: +1 at s, -1 elsewhere. Folding the global sign
// here keeps Q a plain Sequence.
LinearOp minus_selective_inversion(std::uint64_t dim, BasisIndex s) {
  std::vector<Complex> entries(dim, Complex(-1.0, 0.0));
  entries[s] = Complex(1.0, 0.0);
  return LinearOp::diagonal(std::move(entries));
}

// Projection frame for the invariant plane: e_t = U^-1|t| first, then
// the start direction orthonormalized against it. Degenerates to a
// single direction when |s> lies along U^-1|t> (coupling magnitude 1).
struct TraceFrame {
  std::vector<Complex> e_t;
  std::vector<Complex> e_s;
  bool have_e_s = false;

  static TraceFrame build(const AmplificationProblem& p) {
    TraceFrame f;
    StateVector w = apply(adjoint(p.u), StateVector::basis(p.u.dim(), p.t));
    f.e_t = w.amps();
    // v_s - <e_t, v_s> e_t ; <e_t, v_s> = conj(e_t[s])
    Complex overlap = std::conj(f.e_t[p.s]);
    std::vector<Complex> raw(p.u.dim(), Complex(0.0, 0.0));
    raw[p.s] = Complex(1.0, 0.0);
    for (std::uint64_t i = 0; i < raw.size(); ++i) raw[i] -= overlap * f.e_t[i];
    double nrm = 0.0;
    for (const Complex& z : raw) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm > 1e-12) {
      for (Complex& z : raw) z /= nrm;
      f.e_s = std::move(raw);
      f.have_e_s = true;
    }
    return f;
  }

  TraceRow project(const StateVector& psi) const {
    TraceRow row;
    Complex at(0.0, 0.0), as(0.0, 0.0);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) at += std::conj(e_t[i]) * psi[i];
    if (have_e_s) {
      for (std::uint64_t i = 0; i < psi.dim(); ++i) as += std::conj(e_s[i]) * psi[i];
    }
    row.a_t = at;
    row.a_s = as;
    double res = 0.0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
      Complex r = psi[i] - at * e_t[i];
      if (have_e_s) r -= as * e_s[i];
      res += std::norm(r);
    }
    row.residual = std::sqrt(res);
    return row;
  }
};

}  // namespace

AmplificationProblem::AmplificationProblem(LinearOp u_, BasisIndex s_, BasisIndex t_)
    : u(std::move(u_)), s(s_), t(t_) {
  require(s < u.dim() && t < u.dim(), "start/target index out of range");
}

LinearOp build_q(const AmplificationProblem& p) {
  const std::uint64_t dim = p.u.dim();
  std::vector<LinearOp> steps;
  steps.reserve(4);
  steps.push_back(p.u);
  steps.push_back(selective_inversion(dim, p.t));
  steps.push_back(adjoint(p.u));
  steps.push_back(minus_selective_inversion(dim, p.s));
  return LinearOp::sequence(std::move(steps));
}

LinearOp build_q_rotated(const AmplificationProblem& p, const LinearOp& v) {
  require(v.dim() == p.u.dim(), "build_q_rotated: dimension mismatch");
  const std::uint64_t dim = p.u.dim();
  std::vector<LinearOp> steps;
  steps.reserve(6);
  steps.push_back(p.u);
  steps.push_back(v);
  steps.push_back(selective_inversion(dim, p.t));
  steps.push_back(adjoint(v));
  steps.push_back(adjoint(p.u));
  steps.push_back(minus_selective_inversion(dim, p.s));
  return LinearOp::sequence(std::move(steps));
}

CouplingReport coupling(const AmplificationProblem& p) {
  CouplingReport rep;
  StateVector us = apply(p.u, StateVector::basis(p.u.dim(), p.s));
  rep.u_ts = us[p.t];
  rep.magnitude = std::abs(rep.u_ts);
  if (rep.magnitude <= kZeroCouplingTol) {
    throw ZeroCouplingError("target is unreachable: |<t|U|s>| is numerically zero");
  }
  rep.theta = std::asin(std::min(rep.magnitude, 1.0));
  // The exact-angle form of the paper's eta = pi / (4 |U_ts|): the
  // integer maximizing sin^2((2 eta + 1) theta).
  double opt = std::numbers::pi / (4.0 * rep.theta) - 0.5;
  long long rounded = std::llround(opt);
  rep.eta_opt = rounded > 0 ? static_cast<std::uint64_t>(rounded) : 0;
  return rep;
}

RunResult run(const AmplificationProblem& p, std::uint64_t eta, const RunOptions& opts) {
  const LinearOp q = build_q(p);
  StateVector psi = StateVector::basis(p.u.dim(), p.s);

  IterationTrace trace;
  TraceFrame frame;
  if (opts.want_trace) {
    frame = TraceFrame::build(p);
    trace.rows.reserve(eta + 1);
    trace.rows.push_back(frame.project(psi));
  }
  for (std::uint64_t j = 0; j < eta; ++j) {
    psi = apply(q, psi);
    if (opts.want_trace) trace.rows.push_back(frame.project(psi));
  }
  if (opts.apply_final_u) psi = apply(p.u, psi);

  RunResult res{std::move(psi), std::move(trace), Complex(0, 0), 0.0};
  res.amp_t = res.state[p.t];
  res.prob_t = std::norm(res.amp_t);
  return res;
}

Mat2 two_by_two(Complex u_ts) {
  require(std::abs(u_ts) <= 1.0 + 1e-12, "|u_ts| must be at most 1");
  double m2 = std::norm(u_ts);
  return {Complex(1.0 - 4.0 * m2, 0.0), 2.0 * u_ts, -2.0 * std::conj(u_ts),
          Complex(1.0, 0.0)};
}

LinearOp compose_algorithm(std::vector<LinearOp> gates) {
  require(!gates.empty(), "cannot compose an empty gate list");
  return LinearOp::sequence(std::move(gates));
}

LinearOp invert_algorithm(const LinearOp& alg) { return adjoint(alg); }

GeneralAmplification amplify_general(const LinearOp& alg, BasisIndex s, BasisIndex t,
                                     const RunOptions& opts) {
  AmplificationProblem p(alg, s, t);
  GeneralAmplification out{coupling(p), 0.0,
                           RunResult{StateVector::basis(1, 0), {}, Complex(0, 0), 0.0},
                           0};
  out.initial_prob = out.coupling.magnitude * out.coupling.magnitude;
  out.eta_used = out.coupling.eta_opt;
  out.result = run(p, out.eta_used, opts);
  return out;
}

}  // namespace qamp
