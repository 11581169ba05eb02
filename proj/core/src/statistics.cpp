// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/statistics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qamp/amplify.hpp"
#include "qamp/rng.hpp"
#include "qamp/sampling.hpp"
#include "qamp/transforms.hpp"

namespace qamp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt3 = 0.57735026918962576451;

unsigned log2_exact(std::uint64_t n) {
  require(n >= 1 && std::has_single_bit(n), "length must be a power of two");
  return static_cast<unsigned>(std::countr_zero(n));
}

void check_range(const std::vector<double>& values, ValueRange range) {
  for (double x : values) {
    require(std::isfinite(x), "dataset value is not finite");
    if (range == ValueRange::kUnit) {
      require(x >= 0.0 && x <= 1.0, "unit-range dataset value outside [0, 1]");
    } else {
      require(x > -0.5 && x < 0.5, "centered dataset value outside (-0.5, 0.5)");
    }
  }
}

double max_abs(const std::vector<double>& values) {
  double m = 0.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

// Exact inversion of phat = sin^2((2 eta + 1) arcsin e): unbiased in the
// phat -> p limit for couplings inside the monotone window.
double invert_amplitude_law(double phat, std::uint64_t eta) {
  phat = std::clamp(phat, 0.0, 1.0);
  return std::sin(std::asin(std::sqrt(phat)) / (2.0 * static_cast<double>(eta) + 1.0));
}

// Sampling-noise scale of the inverted estimate: arcsin(sqrt(phat)) is
// variance-stabilized with sd ~ 1/(2 sqrt(shots)).
double inversion_sigma(std::uint64_t eta, std::uint64_t shots) {
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(shots)) *
                (2.0 * static_cast<double>(eta) + 1.0));
}

DataSet shifted_copy(const DataSet& d, double delta) {
  DataSet out = d;
  for (double& x : out.values) x += delta;
  return out;
}

}  // namespace

DataSet DataSet::from_values(std::vector<double> values, ValueRange range) {
  DataSet d;
  d.n = log2_exact(values.size());
  check_range(values, range);
  d.values = std::move(values);
  d.range = range;
  return d;
}

double DataSet::mean() const {
  double s = 0.0;
  for (double x : values) s += x;
  return s / static_cast<double>(values.size());
}

std::vector<double> load_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open values file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
      throw ParseError(path + ": not a valid JSON array of numbers");
    }
    std::vector<double> values;
    values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number()) {
        throw ParseError(path + ": element " + std::to_string(i) + " is not a number");
      }
      values.push_back(j[i].get<double>());
    }
    return values;
  }

  // Newline-separated decimals, one value per line. Blank lines are
  // permitted; anything else names its line number.
  std::vector<double> values;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.empty()) continue;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(trimmed, &used);
    } catch (const std::exception&) {
      throw ParseError(path + ": line " + std::to_string(lineno) + ": not a number");
    }
    if (used != trimmed.size()) {
      throw ParseError(path + ": line " + std::to_string(lineno) +
                       ": trailing characters after number");
    }
    values.push_back(x);
  }
  return values;
}

DataSet DataSet::load(const std::string& path, ValueRange range) {
  std::vector<double> values = load_values_file(path);
  if (values.empty() || !std::has_single_bit(values.size())) {
    throw ParseError(path + ": value count " + std::to_string(values.size()) +
                     " is not a power of two");
  }
  try {
    return from_values(std::move(values), range);
  } catch (const ContractError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Median estimation
// ---------------------------------------------------------------------------

double epsilon_of(const DataSet& d, double theta) {
  std::int64_t above = 0, below = 0;
  for (double x : d.values) {
    if (x >= theta) {
      ++above;
    } else {
      ++below;
    }
  }
  return static_cast<double>(above - below) / static_cast<double>(d.values.size());
}

LinearOp threshold_inversion(const DataSet& d, double theta) {
  std::vector<Complex> entries;
  entries.reserve(d.values.size());
  for (double x : d.values) {
    entries.emplace_back(x < theta ? -1.0 : 1.0, 0.0);
  }
  return LinearOp::diagonal(std::move(entries));
}

LinearOp median_unitary(const DataSet& d, double theta) {
  LinearOp w = walsh_hadamard(d.n);
  return LinearOp::sequence({w, threshold_inversion(d, theta), w});
}

MedianRun estimate_epsilon(const DataSet& d, double theta, double epsilon_0,
                           std::uint64_t shots, std::uint64_t seed) {
  require(epsilon_0 > 0.0, "epsilon_0 must be positive");
  require(shots >= 1, "shots must be at least 1");
  MedianRun out;
  out.theta = theta;
  out.epsilon_true = epsilon_of(d, theta);
  out.epsilon_0 = epsilon_0;
  out.eta = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(1.0 / (8.0 * epsilon_0))));
  out.shots = shots;

  AmplificationProblem p(median_unitary(d, theta), 0, 0);
  RunResult r = run(p, out.eta);
  double phat = born_sample(r.state, {0}, shots, seed);
  double est = invert_amplitude_law(phat, out.eta);
  if (est > 2.0 * epsilon_0) {
    est = 2.0 * epsilon_0;
    out.saturated = true;
  }
  out.epsilon_estimate = est;
  // One R per U; the circuit U (Q^eta with two U's each) has 2 eta + 1.
  out.queries = shots * (2 * out.eta + 1);
  return out;
}

MedianReport estimate_median(const DataSet& d, double eps, std::uint64_t seed,
                             const MedianOptions& opts) {
  require(d.range == ValueRange::kUnit, "median estimation needs a unit-range dataset");
  const double n_values = static_cast<double>(d.values.size());
  require(eps >= 4.0 / n_values, "eps below the 4/N resolution floor");

  const double bracket_floor = 1.0 / n_values;
  const double eps0_floor = std::max(eps / 2.0, 1.0 / (2.0 * n_values));
  const std::uint64_t verify_shots = 4 * opts.shots;

  MedianReport rep;
  double lo = 0.0, hi = 1.0;
  double eps0 = opts.epsilon_0_start;
  std::uint64_t stream = 0;

  auto probe = [&](double theta, double e0, std::uint64_t shots) {
    MedianRun r = estimate_epsilon(d, theta, e0, shots, Rng::derive(seed, stream++));
    rep.total_queries += r.queries;
    ++rep.runs;
    return r;
  };
  // Certification at epsilon_0 = eps/2: accepted only when the estimate
  // plus twice its noise scale clears the target.
  auto certify = [&](double theta) {
    MedianRun r = probe(theta, eps / 2.0, verify_shots);
    bool ok = r.epsilon_estimate + 2.0 * inversion_sigma(r.eta, verify_shots) <= eps;
    rep.theta_hat = theta;
    rep.epsilon_estimate = r.epsilon_estimate;
    rep.verified = ok;
    return ok;
  };

  while (true) {
    if (hi - lo <= bracket_floor) {
      certify(0.5 * (lo + hi));
      rep.termination = "bracket";
      return rep;
    }
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    MedianRun r1 = probe(m1, eps0, opts.probe_shots);
    MedianRun r2 = probe(m2, eps0, opts.probe_shots);

    if (eps0 <= 2.0 * eps) {
      for (const MedianRun* cand : {&r1, &r2}) {
        if (cand->epsilon_estimate <= 0.9 * eps) {
          if (certify(cand->theta)) {
            rep.termination = "estimate";
            return rep;
          }
          break;
        }
      }
    }

    double tie_tol = 4.0 * inversion_sigma(r1.eta, opts.probe_shots);
    if (std::abs(r1.epsilon_estimate - r2.epsilon_estimate) <= tie_tol) {
      lo = m1;  // near-equal probes: keep the middle third
      hi = m2;
    } else if (r1.epsilon_estimate < r2.epsilon_estimate) {
      hi = m2;
    } else {
      lo = m1;
    }

    ++rep.steps;
    if (rep.steps % opts.steps_per_stage == 0 && eps0 > eps0_floor) {
      eps0 = std::max(eps0 / 2.0, eps0_floor);
    }
  }
}

// ---------------------------------------------------------------------------
// Mean estimation
// ---------------------------------------------------------------------------

MeanOps mean_ops(const DataSet& d, double c) {
  require(c > 0.0 && std::isfinite(c), "scale c must be positive");
  require(c * max_abs(d.values) <= kInvSqrt2 + 1e-15,
          "scale violation: c * max|x_a| must be at most 1/sqrt2");

  MeanStateSpace space(d.n);
  const std::uint64_t dim = space.dim();
  const std::uint64_t n_values = space.size();

  const double h3 = std::sqrt(3.0) / 2.0;
  LinearOp m1 = LinearOp::pair_blocks(
      dim, {{space.s_index(0), space.q_index(),
             Mat2{Complex(h3, 0), Complex(0.5, 0), Complex(0.5, 0), Complex(-h3, 0)}}});
  LinearOp m2 = LinearOp::pair_blocks(
      dim, {{space.s_index(0), space.q_index(),
             Mat2{Complex(kInvSqrt2, 0), Complex(-kInvSqrt2, 0), Complex(kInvSqrt2, 0),
                  Complex(kInvSqrt2, 0)}}});

  std::vector<LinearOp::PairBlock> r_blocks;
  r_blocks.reserve(n_values);
  for (std::uint64_t a = 0; a < n_values; ++a) {
    const double cx = c * d.values[a];
    const double radicand = 2.0 / 3.0 - (4.0 / 3.0) * cx * cx;
    const double cross = std::sqrt(std::max(0.0, radicand));
    const Complex stay_s(kInvSqrt3, 2.0 * cx * kInvSqrt3);
    const Complex stay_r(-kInvSqrt3, 2.0 * cx * kInvSqrt3);
    r_blocks.push_back({space.s_index(a), space.r_index(a),
                        Mat2{stay_s, Complex(cross, 0), Complex(cross, 0), stay_r}});
  }
  LinearOp r1 = LinearOp::pair_blocks(dim, std::move(r_blocks));

  // W-H on the n low qubits, restricted to the S block (prefix 00): one
  // layer of in-block pairs per qubit, every other state untouched.
  const Mat2 m = m_gate();
  std::vector<LinearOp> layers;
  layers.reserve(d.n);
  for (unsigned q = 0; q < d.n; ++q) {
    const std::uint64_t mask = 1ULL << q;
    std::vector<LinearOp::PairBlock> blocks;
    blocks.reserve(n_values / 2);
    for (std::uint64_t a = 0; a < n_values; ++a) {
      if ((a & mask) == 0) blocks.push_back({space.s_index(a), space.s_index(a | mask), m});
    }
    layers.push_back(LinearOp::pair_blocks(dim, std::move(blocks)));
  }
  LinearOp w1 = LinearOp::sequence(std::move(layers));

  return MeanOps{std::move(m1), std::move(w1), std::move(r1), std::move(m2)};
}

LinearOp mean_unitary(const DataSet& d, double c) {
  MeanOps ops = mean_ops(d, c);
  return LinearOp::sequence({ops.m1, ops.w1, ops.r1, ops.w1, ops.m2});
}

double mean_scale_for(const DataSet& d, double epsilon_0) {
  require(epsilon_0 > 0.0, "epsilon_0 must be positive");
  std::uint64_t eta = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(1.0 / (2.0 * epsilon_0))));
  double worst = std::max(max_abs(d.values), max_abs(shifted_copy(d, epsilon_0).values));
  double c_range = kInvSqrt2 / std::max(worst, 1e-300);
  // Invertibility over both runs (|mu'| up to 2 epsilon_0):
  // (2 eta + 1) arcsin(c sqrt2 epsilon_0) <= pi/2.
  double c_window = std::sqrt(2.0) *
                    std::sin((std::numbers::pi / 2.0) / (2.0 * static_cast<double>(eta) + 1.0)) /
                    (2.0 * epsilon_0);
  return std::min(c_range, c_window);
}

MeanRun estimate_mu_stage(const DataSet& d, double c, double epsilon_0,
                          std::uint64_t shots, std::uint64_t seed) {
  require(epsilon_0 > 0.0, "epsilon_0 must be positive");
  require(shots >= 1, "shots must be at least 1");
  MeanRun out;
  out.c = c;
  out.epsilon_0 = epsilon_0;
  out.eta = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(1.0 / (2.0 * epsilon_0))));
  out.shots = shots;

  auto magnitude_run = [&](const DataSet& data, std::uint64_t run_seed) {
    AmplificationProblem p(mean_unitary(data, c), 0, 0);
    RunResult r = run(p, out.eta);
    double phat = born_sample(r.state, {0}, shots, run_seed);
    return std::sqrt(2.0) * invert_amplitude_law(phat, out.eta) / c;
  };

  double mag = magnitude_run(d, Rng::derive(seed, 0));
  if (mag > 2.0 * epsilon_0) {
    mag = 2.0 * epsilon_0;
    out.saturated = true;
  }
  // Sign: |mu + epsilon_0| >= epsilon_0 exactly when mu >= 0 (the shifted
  // mean is always positive under the stage contract |mu| < epsilon_0).
  double shifted_mag = magnitude_run(shifted_copy(d, epsilon_0), Rng::derive(seed, 1));
  double sign = shifted_mag >= epsilon_0 ? 1.0 : -1.0;

  out.mu_estimate = sign * mag;
  out.queries = 2 * shots * (2 * out.eta + 1);
  return out;
}

MeanReport estimate_mean(const DataSet& d, double eps, std::uint64_t seed,
                         const MeanOptions& opts) {
  require(d.range == ValueRange::kCentered,
          "mean estimation needs a centered-range dataset");
  require(eps >= std::pow(2.0, -static_cast<double>(d.n) - 2.0),
          "eps below the 2^{-n-2} resolution floor");

  MeanReport rep;
  DataSet work = d;
  double eps0 = opts.epsilon_0_start;
  for (std::uint64_t stage = 0; stage < 64; ++stage) {
    double c = mean_scale_for(work, eps0);
    MeanRun r = estimate_mu_stage(work, c, eps0, opts.shots, Rng::derive(seed, stage));
    rep.mu_hat += r.mu_estimate;
    rep.total_queries += r.queries;
    rep.stages.push_back(r);
    work = shifted_copy(work, -r.mu_estimate);
    if (eps0 > eps) {
      eps0 /= 2.0;
    } else {
      break;
    }
  }
  return rep;
}

}  // namespace qamp
