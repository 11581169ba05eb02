// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/search.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "qamp/rng.hpp"
#include "qamp/sampling.hpp"
#include "qamp/transforms.hpp"

namespace qamp {

namespace {

SearchResult engine_search(const LinearOp& u, BasisIndex start, BasisIndex target,
                           std::uint64_t seed, std::optional<std::uint64_t> eta_override,
                           bool want_trace) {
  AmplificationProblem p(u, start, target);
  SearchResult out;
  out.seed = seed;
  out.coupling = coupling(p);
  out.eta_used = eta_override.value_or(out.coupling.eta_opt);
  double pred = std::sin((2.0 * static_cast<double>(out.eta_used) + 1.0) *
                         out.coupling.theta);
  out.predicted_success = pred * pred;
  RunOptions opts;
  opts.want_trace = want_trace;
  RunResult r = run(p, out.eta_used, opts);
  out.simulated_success = r.prob_t;
  Rng rng(seed);
  out.sampled_outcome = born_draw(r.state, rng);
  out.oracle_applications = out.eta_used;  // one I_t per iteration
  out.trace = std::move(r.trace);
  out.final_state = std::move(r.state);
  return out;
}

}  // namespace

SearchResult search_from_zero(unsigned n, BasisIndex target, std::uint64_t seed,
                              std::optional<std::uint64_t> eta_override,
                              bool want_trace) {
  require(n >= 1 && n <= 24, "qubit count out of range");
  require(target < (1ULL << n), "target out of range");
  return engine_search(walsh_hadamard(n), 0, target, seed, eta_override, want_trace);
}

SearchResult search_from_basis(unsigned n, BasisIndex start, BasisIndex target,
                               std::uint64_t seed,
                               std::optional<std::uint64_t> eta_override,
                               bool want_trace) {
  require(n >= 1 && n <= 24, "qubit count out of range");
  require(start < (1ULL << n) && target < (1ULL << n), "state out of range");
  return engine_search(walsh_hadamard(n), start, target, seed, eta_override, want_trace);
}

NearbyProblem NearbyProblem::make(unsigned n, BasisIndex known_word, BasisIndex target,
                                  std::optional<double> alpha) {
  require(n >= 1 && n <= 24, "qubit count out of range");
  require(known_word < (1ULL << n) && target < (1ULL << n), "state out of range");
  unsigned k = static_cast<unsigned>(std::popcount(known_word ^ target));
  require(k >= 1, "known word and target must differ");
  NearbyProblem p;
  p.n = n;
  p.known_word = known_word;
  p.k = k;
  p.target = target;
  p.alpha = alpha.value_or(static_cast<double>(n) / static_cast<double>(k));
  require(p.alpha >= 1.0, "alpha must be >= 1");
  return p;
}

SearchResult nearby_search(const NearbyProblem& p, std::uint64_t seed,
                           std::optional<std::uint64_t> eta_override,
                           bool want_trace) {
  require(p.n >= 1 && p.n <= 24, "qubit count out of range");
  require(p.known_word < (1ULL << p.n) && p.target < (1ULL << p.n),
          "state out of range");
  require(std::popcount(p.known_word ^ p.target) == static_cast<int>(p.k),
          "Hamming distance between known word and target must equal k");
  require(p.alpha >= 1.0, "alpha must be >= 1");
  LinearOp u = uniform_single_qubit(p.n, alpha_gate(p.alpha));
  return engine_search(u, p.known_word, p.target, seed, eta_override, want_trace);
}

double nearby_coupling(unsigned n, unsigned k, double alpha) {
  require(k >= 1 && k <= n, "k must lie in [1, n]");
  require(alpha >= 1.0, "alpha must be >= 1");
  return std::pow(1.0 - 1.0 / alpha, (static_cast<double>(n) - k) / 2.0) *
         std::pow(alpha, -static_cast<double>(k) / 2.0);
}

double binomial(unsigned n, unsigned k) {
  require(k <= n && n <= 64, "binomial arguments out of range");
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

StirlingEstimate stirling_steps(unsigned n, unsigned k) {
  StirlingEstimate e;
  double c = nearby_coupling(n, k, static_cast<double>(n) / static_cast<double>(k));
  e.steps = 1.0 / c;
  e.sqrt_binomial = std::sqrt(binomial(n, k));
  return e;
}

std::uint64_t classical_search(unsigned n, BasisIndex target, std::uint64_t seed) {
  require(n >= 1 && n <= 24, "qubit count out of range");
  const std::uint64_t dim = 1ULL << n;
  require(target < dim, "target out of range");
  // Partial Fisher-Yates: draw without replacement until the target shows up.
  std::vector<std::uint64_t> pool(dim);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t j = i + rng.below(dim - i);
    std::swap(pool[i], pool[j]);
    if (pool[i] == target) return i + 1;
  }
  return dim;  // unreachable
}

}  // namespace qamp
