// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_STATISTICS_HPP
#define QAMP_STATISTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qamp/linear_op.hpp"
#include "qamp/types.hpp"

namespace qamp {

enum class ValueRange {
  kUnit,      // each value in [0, 1] (median estimation)
  kCentered,  // each value in (-0.5, 0.5) (mean estimation)
};

/// N = 2^n indexed real values feeding the median/mean oracles.
struct DataSet {
  unsigned n = 0;
  std::vector<double> values;  // length exactly 2^n
  ValueRange range = ValueRange::kUnit;

  static DataSet from_values(std::vector<double> values, ValueRange range);

  /// Reads newline-separated decimals or a JSON-style array of numbers.
  /// Length must be a power of two; values must satisfy the declared
  /// range. Malformed text names the offending line.
  static DataSet load(const std::string& path, ValueRange range);

  double mean() const;
};

/// Parses a values file without range/length validation (the CLI uses
/// DataSet::load; this is the shared reader underneath).
std::vector<double> load_values_file(const std::string& path);

// ---------------------------------------------------------------------------
// Median estimation
// ---------------------------------------------------------------------------

/// (count{x_a >= theta} - count{x_a < theta}) / N. Ties count as above,
/// matching the sign convention of threshold_inversion.
double epsilon_of(const DataSet& d, double theta);

/// Diagonal with entry -1 where x_a < theta, +1 otherwise; self-inverse.
LinearOp threshold_inversion(const DataSet& d, double theta);

/// U = W R W on n qubits; <0|U|0> equals epsilon_of(d, theta) exactly.
LinearOp median_unitary(const DataSet& d, double theta);

/// One amplified-and-sampled estimate of |epsilon| at a threshold.
struct MedianRun {
  double theta = 0.0;
  double epsilon_true = 0.0;  // classical oracle value, for bookkeeping
  double epsilon_0 = 0.0;
  std::uint64_t eta = 0;
  std::uint64_t shots = 0;
  double epsilon_estimate = 0.0;  // magnitude only
  bool saturated = false;         // estimate clamped at 2 epsilon_0
  std::uint64_t queries = 0;      // shots * (R applications per circuit)
};

/// Amplifies with Q = -I_0 U^-1 I_0 U (s = t = 0) for
/// eta = max(1, floor(1 / (8 epsilon_0))) iterations plus the trailing U,
/// samples the 0-outcome frequency, and inverts the exact
/// sin^2((2 eta + 1) arcsin|epsilon|) law. Caller contract:
/// |epsilon| < 2 epsilon_0.
MedianRun estimate_epsilon(const DataSet& d, double theta, double epsilon_0,
                           std::uint64_t shots, std::uint64_t seed);

struct MedianOptions {
  std::uint64_t shots = 256;        // certification sample size is 4x this
  std::uint64_t probe_shots = 64;   // cheap bracketing probes
  double epsilon_0_start = 0.5;
  unsigned steps_per_stage = 2;     // ternary steps before halving epsilon_0
};

struct MedianReport {
  double theta_hat = 0.0;
  double epsilon_estimate = 0.0;  // from the final certification run
  bool verified = false;          // certification met the target precision
  std::string termination;        // "estimate" or "bracket"
  std::uint64_t total_queries = 0;
  std::uint64_t steps = 0;
  std::uint64_t runs = 0;
};

/// Ternary search on |epsilon(theta)| (V-shaped with its minimum at the
/// median) over a geometric epsilon_0 schedule. Terminates when a
/// certified estimate reaches `eps` or the bracket width falls below
/// 1/N. Requires eps >= 4/N.
MedianReport estimate_median(const DataSet& d, double eps, std::uint64_t seed,
                             const MedianOptions& opts = {});

// ---------------------------------------------------------------------------
// Mean estimation
// ---------------------------------------------------------------------------

/// Index layout of the (2^{n+1} + 1)-state system on n + 2 qubits:
/// S_a at prefix 00, R_a at prefix 01, the single Q state at prefix 10,
/// everything else inert.
struct MeanStateSpace {
  unsigned n = 0;

  explicit MeanStateSpace(unsigned n_) : n(n_) {}
  std::uint64_t size() const { return 1ULL << n; }           // N
  std::uint64_t dim() const { return 1ULL << (n + 2); }      // 4N
  BasisIndex s_index(std::uint64_t a) const { return a; }
  BasisIndex r_index(std::uint64_t a) const { return size() + a; }
  BasisIndex q_index() const { return 2 * size(); }
};

/// The four unitaries of the mean circuit, c-scaled: the S0 amplitude of
/// the composed circuit is linear in c, and c keeps the R1 radicand
/// non-negative after shifts push values outside (-0.5, 0.5).
struct MeanOps {
  LinearOp m1;
  LinearOp w1;
  LinearOp r1;
  LinearOp m2;
};

/// Requires c * max|x_a| <= 1/sqrt2.
MeanOps mean_ops(const DataSet& d, double c);

/// U as the temporal sequence M1, W1, R1, W1, M2 (M1 applied first);
/// <S0|U|S0> = i c mu / sqrt2 with mu the true mean.
LinearOp mean_unitary(const DataSet& d, double c);

/// Largest scale c that (a) keeps the R1 radicand valid for this stage's
/// data and its +epsilon_0 shifted copy and (b) keeps the amplitude law
/// invertible over |mu| < 2 epsilon_0 at this stage's eta.
double mean_scale_for(const DataSet& d, double epsilon_0);

struct MeanRun {
  double c = 0.0;
  double epsilon_0 = 0.0;
  std::uint64_t eta = 0;
  std::uint64_t shots = 0;
  double mu_estimate = 0.0;  // signed
  bool saturated = false;
  std::uint64_t queries = 0;  // both runs: 2 * shots * (R1 applications per circuit)
};

/// One stage: eta = max(1, floor(1 / (2 epsilon_0))) iterations of
/// Q = -I_S0 U^-1 I_S0 U plus the trailing U, sampled at S0; magnitude
/// from the exact inversion, sign from a second run on data shifted by
/// +epsilon_0 (|mu + epsilon_0| >= epsilon_0 iff mu >= 0). Caller
/// contract: c|mu| < epsilon_0.
MeanRun estimate_mu_stage(const DataSet& d, double c, double epsilon_0,
                          std::uint64_t shots, std::uint64_t seed);

struct MeanOptions {
  std::uint64_t shots = 256;
  double epsilon_0_start = 0.5;
};

struct MeanReport {
  double mu_hat = 0.0;
  std::uint64_t total_queries = 0;
  std::vector<MeanRun> stages;
};

/// The outer loop: estimate, shift values by the estimate, halve
/// epsilon_0, repeat until epsilon_0 <= eps; mu_hat is the sum of stage
/// estimates. Requires eps >= 2^{-n-2}.
MeanReport estimate_mean(const DataSet& d, double eps, std::uint64_t seed,
                         const MeanOptions& opts = {});

}  // namespace qamp

#endif  // QAMP_STATISTICS_HPP
