// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_SEARCH_HPP
#define QAMP_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "qamp/amplify.hpp"
#include "qamp/types.hpp"

namespace qamp {

struct SearchResult {
  std::uint64_t eta_used = 0;
  double predicted_success = 0.0;  // sin^2((2 eta + 1) theta)
  double simulated_success = 0.0;  // |amplitude on target|^2
  BasisIndex sampled_outcome = 0;  // one Born measurement of the final state
  std::uint64_t oracle_applications = 0;  // one I_t per iteration
  std::uint64_t seed = 0;
  CouplingReport coupling;
  std::optional<StateVector> final_state;  // for downstream sampling
  IterationTrace trace;                    // filled when want_trace is set
};

/// Exhaustive search over 2^n states with U = W-H, start |0...0>.
SearchResult search_from_zero(unsigned n, BasisIndex target, std::uint64_t seed,
                              std::optional<std::uint64_t> eta_override = {},
                              bool want_trace = false);

/// Same engine call from an arbitrary start basis state; success is
/// independent of s (|<t|W|s>| = 2^{-n/2} for every pair).
SearchResult search_from_basis(unsigned n, BasisIndex start, BasisIndex target,
                               std::uint64_t seed,
                               std::optional<std::uint64_t> eta_override = {},
                               bool want_trace = false);

/// Search for a target known to differ from a given word in exactly k
/// bits, using the alpha gate on every qubit instead of W-H.
struct NearbyProblem {
  unsigned n = 0;
  BasisIndex known_word = 0;
  unsigned k = 0;
  BasisIndex target = 0;
  double alpha = 2.0;

  /// Validates the Hamming-distance constraint; alpha defaults to n/k,
  /// the coupling-maximizing choice.
  static NearbyProblem make(unsigned n, BasisIndex known_word, BasisIndex target,
                            std::optional<double> alpha = {});
};

SearchResult nearby_search(const NearbyProblem& p, std::uint64_t seed,
                           std::optional<std::uint64_t> eta_override = {},
                           bool want_trace = false);

/// Closed form (1 - 1/alpha)^{(n-k)/2} * alpha^{-k/2} for the coupling
/// of the tensored alpha gate between words k bits apart.
double nearby_coupling(unsigned n, unsigned k, double alpha);

struct StirlingEstimate {
  double steps = 0.0;          // 1 / coupling at alpha = n/k
  double sqrt_binomial = 0.0;  // sqrt(C(n, k)), the searched-space root
};

/// Step estimate at the optimal alpha, next to sqrt C(n,k); the two
/// agree up to the Stirling remainder.
StirlingEstimate stirling_steps(unsigned n, unsigned k);

/// Exact binomial coefficient as a double (n <= 64).
double binomial(unsigned n, unsigned k);

/// Classical baseline: draws states uniformly without replacement until
/// hitting the target; returns the number of evaluations used.
std::uint64_t classical_search(unsigned n, BasisIndex target, std::uint64_t seed);

}  // namespace qamp

#endif  // QAMP_SEARCH_HPP
