// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "qamp/circuit.hpp"
#include "qamp/rng.hpp"
#include "qamp/sampling.hpp"
#include "qamp/search.hpp"
#include "qamp/statistics.hpp"
#include "qamp/transforms.hpp"

namespace qamp::cli {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count() * 1.0;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void check_dim_cap(std::uint64_t dim, const RunConfig& cfg) {
  if (dim > cfg.max_dim) {
    throw ResourceLimitError("state dimension " + std::to_string(dim) +
                             " exceeds the max-dim guard " + std::to_string(cfg.max_dim) +
                             " (raise with --max-dim)");
  }
}

JsonDoc coupling_block(const CouplingReport& rep) {
  JsonDoc d;
  d.put("u_ts_re", rep.u_ts.real());
  d.put("u_ts_im", rep.u_ts.imag());
  d.put("magnitude", rep.magnitude);
  d.put("theta", rep.theta);
  return d;
}

JsonDoc predicted_block(const CouplingReport& rep, std::uint64_t eta) {
  double a_s = std::cos(2.0 * static_cast<double>(eta) * rep.theta);
  double a_t = std::sin((2.0 * static_cast<double>(eta) + 1.0) * rep.theta);
  JsonDoc d;
  d.put("a_s", a_s);
  d.put("a_t", a_t);
  d.put("success", a_t * a_t);
  return d;
}

JsonDoc simulated_block(const Complex& amp_t) {
  JsonDoc d;
  d.put("amp_t_re", amp_t.real());
  d.put("amp_t_im", amp_t.imag());
  d.put("prob_t", std::norm(amp_t));
  return d;
}

JsonDoc sampling_block(std::uint64_t shots, double frequency, BasisIndex outcome) {
  JsonDoc d;
  d.put("shots", shots);
  d.put("frequency", frequency);
  d.put("outcome", outcome);
  return d;
}

void finish(JsonDoc& doc, const RunConfig& cfg, const Stopwatch& watch) {
  doc.put("seed", cfg.seed);
  if (cfg.timing) doc.put("elapsed_ms", watch.elapsed_ms());
}

JsonDoc search_report(const RunConfig& cfg, const SearchResult& r, JsonDoc params,
                      const char* command, const Stopwatch& watch,
                      JsonDoc* stirling = nullptr) {
  BasisIndex target = parse_state_token(cfg.target_token, cfg.n);
  double freq = born_sample(*r.final_state, {target}, cfg.shots, r.seed);
  JsonDoc doc;
  doc.put("command", command);
  doc.put("params", std::move(params));
  doc.put("coupling", coupling_block(r.coupling));
  if (stirling != nullptr) doc.put("stirling", std::move(*stirling));
  doc.put("eta", r.eta_used);
  doc.put("predicted", predicted_block(r.coupling, r.eta_used));
  doc.put("simulated", simulated_block((*r.final_state)[target]));
  doc.put("sampling", sampling_block(cfg.shots, freq, r.sampled_outcome));
  doc.put("queries", r.oracle_applications);
  finish(doc, cfg, watch);

  if (!cfg.trace_path.empty()) write_trace(r.trace, cfg.trace_path);
  return doc;
}

}  // namespace

BasisIndex parse_state_token(const std::string& token, unsigned n) {
  if (token.empty()) throw ParseError("empty basis-state token");
  bool binary = token.size() == n &&
                std::all_of(token.begin(), token.end(),
                            [](char c) { return c == '0' || c == '1'; });
  std::uint64_t value = 0;
  if (binary) {
    for (char c : token) value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  } else {
    std::size_t used = 0;
    try {
      value = std::stoull(token, &used, 10);
    } catch (const std::exception&) {
      throw ParseError("bad basis-state token: '" + token + "'");
    }
    if (used != token.size()) {
      throw ParseError("bad basis-state token: '" + token + "'");
    }
  }
  require(value < (1ULL << n),
          "basis state " + token + " out of range for n = " + std::to_string(n));
  return value;
}

std::string to_bitstring(BasisIndex value, unsigned n) {
  std::string s(n, '0');
  for (unsigned q = 0; q < n; ++q) {
    if ((value >> q) & 1) s[n - 1 - q] = '1';
  }
  return s;
}

JsonDoc cmd_search(const RunConfig& cfg) {
  Stopwatch watch;
  check_dim_cap(1ULL << cfg.n, cfg);
  BasisIndex target = parse_state_token(cfg.target_token, cfg.n);
  bool want_trace = !cfg.trace_path.empty();

  SearchResult r;
  JsonDoc params;
  params.put("n", cfg.n);
  if (cfg.start_token.empty()) {
    r = search_from_zero(cfg.n, target, cfg.seed, cfg.eta_override, want_trace);
    params.put("start", std::uint64_t{0});
  } else {
    BasisIndex start = parse_state_token(cfg.start_token, cfg.n);
    r = search_from_basis(cfg.n, start, target, cfg.seed, cfg.eta_override, want_trace);
    params.put("start", start);
  }
  params.put("target", target);
  params.put("shots", cfg.shots);
  return search_report(cfg, r, std::move(params), "search", watch);
}

JsonDoc cmd_search_near(const RunConfig& cfg) {
  Stopwatch watch;
  check_dim_cap(1ULL << cfg.n, cfg);
  BasisIndex known = parse_state_token(cfg.known_token, cfg.n);
  BasisIndex target = parse_state_token(cfg.target_token, cfg.n);
  NearbyProblem p = NearbyProblem::make(cfg.n, known, target, cfg.alpha);
  if (cfg.k && *cfg.k != p.k) {
    throw ContractError("--k=" + std::to_string(*cfg.k) +
                        " does not match the Hamming distance " + std::to_string(p.k));
  }
  bool want_trace = !cfg.trace_path.empty();
  SearchResult r = nearby_search(p, cfg.seed, cfg.eta_override, want_trace);

  JsonDoc params;
  params.put("n", cfg.n);
  params.put("known", known);
  params.put("target", target);
  params.put("k", p.k);
  params.put("alpha", p.alpha);
  params.put("shots", cfg.shots);

  StirlingEstimate st = stirling_steps(cfg.n, p.k);
  JsonDoc stirling;
  stirling.put("steps_estimate", st.steps);
  stirling.put("sqrt_binomial", st.sqrt_binomial);
  return search_report(cfg, r, std::move(params), "search-near", watch, &stirling);
}

JsonDoc cmd_median(const RunConfig& cfg) {
  Stopwatch watch;
  DataSet d = DataSet::load(cfg.values_path, ValueRange::kUnit);
  check_dim_cap(1ULL << d.n, cfg);
  MedianOptions opts;
  opts.shots = cfg.shots;
  if (cfg.epsilon_0) opts.epsilon_0_start = *cfg.epsilon_0;
  MedianReport rep = estimate_median(d, cfg.epsilon, cfg.seed, opts);

  JsonDoc params;
  params.put("values_path", cfg.values_path);
  params.put("n", d.n);
  params.put("epsilon", cfg.epsilon);
  params.put("epsilon_0_start", opts.epsilon_0_start);
  params.put("shots", opts.shots);

  JsonDoc estimate;
  estimate.put("value", rep.theta_hat);
  estimate.put("epsilon_estimate", rep.epsilon_estimate);
  estimate.put("verified", rep.verified);
  estimate.put("termination", rep.termination);
  estimate.put("target_precision", cfg.epsilon);

  // classical sort oracle
  std::vector<double> sorted = d.values;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[sorted.size() / 2];
  double eps_at = epsilon_of(d, rep.theta_hat);
  JsonDoc truth;
  truth.put("value", median);
  truth.put("epsilon_at_estimate", eps_at);
  truth.put("abs_error", std::abs(eps_at));

  JsonDoc doc;
  doc.put("command", "median");
  doc.put("params", std::move(params));
  doc.put("estimate", std::move(estimate));
  doc.put("truth", std::move(truth));
  doc.put("queries", rep.total_queries);
  doc.put("steps", rep.steps);
  finish(doc, cfg, watch);
  return doc;
}

JsonDoc cmd_mean(const RunConfig& cfg) {
  Stopwatch watch;
  DataSet d = DataSet::load(cfg.values_path, ValueRange::kCentered);
  check_dim_cap(1ULL << (d.n + 2), cfg);
  MeanOptions opts;
  opts.shots = cfg.shots;
  if (cfg.epsilon_0) opts.epsilon_0_start = *cfg.epsilon_0;
  MeanReport rep = estimate_mean(d, cfg.epsilon, cfg.seed, opts);

  JsonDoc params;
  params.put("values_path", cfg.values_path);
  params.put("n", d.n);
  params.put("epsilon", cfg.epsilon);
  params.put("epsilon_0_start", opts.epsilon_0_start);
  params.put("shots", opts.shots);

  JsonDoc estimate;
  estimate.put("value", rep.mu_hat);
  estimate.put("target_precision", cfg.epsilon);

  double mu = d.mean();
  JsonDoc truth;
  truth.put("value", mu);
  truth.put("abs_error", std::abs(rep.mu_hat - mu));

  JsonDoc doc;
  doc.put("command", "mean");
  doc.put("params", std::move(params));
  doc.put("estimate", std::move(estimate));
  doc.put("truth", std::move(truth));
  doc.put("queries", rep.total_queries);
  doc.put("stages", static_cast<std::uint64_t>(rep.stages.size()));
  finish(doc, cfg, watch);
  return doc;
}

JsonDoc cmd_amplify_circuit(const RunConfig& cfg) {
  Stopwatch watch;
  const std::uint64_t dim = 1ULL << cfg.n;
  check_dim_cap(dim, cfg);
  BasisIndex start = cfg.start_token.empty() ? 0 : parse_state_token(cfg.start_token, cfg.n);
  BasisIndex target = parse_state_token(cfg.target_token, cfg.n);

  std::vector<LinearOp> gates = load_circuit(cfg.circuit_path, cfg.n);
  const std::uint64_t gate_count = gates.size();
  LinearOp alg = gates.empty() ? LinearOp::identity(dim)
                               : compose_algorithm(std::move(gates));

  RunOptions opts;
  opts.want_trace = !cfg.trace_path.empty();
  GeneralAmplification g = amplify_general(alg, start, target, opts);

  double freq = born_sample(g.result.state, {target}, cfg.shots, cfg.seed);
  Rng rng(cfg.seed);
  BasisIndex outcome = born_draw(g.result.state, rng);

  JsonDoc params;
  params.put("n", cfg.n);
  params.put("circuit_path", cfg.circuit_path);
  params.put("gates", gate_count);
  params.put("start", start);
  params.put("target", target);
  params.put("shots", cfg.shots);

  JsonDoc initial;
  initial.put("prob_t", g.initial_prob);

  JsonDoc doc;
  doc.put("command", "amplify-circuit");
  doc.put("params", std::move(params));
  doc.put("coupling", coupling_block(g.coupling));
  doc.put("eta", g.eta_used);
  doc.put("initial", std::move(initial));
  doc.put("predicted", predicted_block(g.coupling, g.eta_used));
  doc.put("simulated", simulated_block(g.result.amp_t));
  doc.put("sampling", sampling_block(cfg.shots, freq, outcome));
  doc.put("queries", g.eta_used);
  finish(doc, cfg, watch);

  if (!cfg.trace_path.empty()) write_trace(g.result.trace, cfg.trace_path);
  return doc;
}

JsonDoc cmd_bench(const RunConfig& cfg) {
  Stopwatch watch;
  const std::uint64_t dim = 1ULL << cfg.n;
  check_dim_cap(dim, cfg);
  BasisIndex target = parse_state_token(cfg.target_token, cfg.n);

  double total = 0.0;
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    total += static_cast<double>(
        classical_search(cfg.n, target, Rng::derive(cfg.seed, i)));
  }

  AmplificationProblem p(walsh_hadamard(cfg.n), 0, target);
  CouplingReport rep = coupling(p);

  JsonDoc params;
  params.put("n", cfg.n);
  params.put("target", target);
  params.put("trials", cfg.trials);

  JsonDoc classical;
  classical.put("expected_evaluations", static_cast<double>(dim) / 2.0);
  classical.put("mean_evaluations", total / static_cast<double>(cfg.trials));
  classical.put("trials", cfg.trials);

  JsonDoc quantum;
  quantum.put("eta_opt", rep.eta_opt);
  quantum.put("oracle_applications", rep.eta_opt);
  double a_t = std::sin((2.0 * static_cast<double>(rep.eta_opt) + 1.0) * rep.theta);
  quantum.put("predicted_success", a_t * a_t);

  JsonDoc doc;
  doc.put("command", "bench");
  doc.put("params", std::move(params));
  doc.put("classical", std::move(classical));
  doc.put("quantum", std::move(quantum));
  finish(doc, cfg, watch);
  return doc;
}

void write_trace(const IterationTrace& trace, const std::string& path) {
  std::string out = "iter,a_s_re,a_s_im,a_t_re,a_t_im,residual\n";
  for (std::size_t j = 0; j < trace.rows.size(); ++j) {
    const TraceRow& row = trace.rows[j];
    out += std::to_string(j);
    out += ',';
    out += JsonDoc::format_double(row.a_s.real());
    out += ',';
    out += JsonDoc::format_double(row.a_s.imag());
    out += ',';
    out += JsonDoc::format_double(row.a_t.real());
    out += ',';
    out += JsonDoc::format_double(row.a_t.imag());
    out += ',';
    out += JsonDoc::format_double(row.residual);
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ContractError("cannot write trace file: " + path);
  f << out;
  if (!f) throw ContractError("failed while writing trace file: " + path);
}

JsonDoc run_command(const RunConfig& cfg) {
  if (cfg.command == "search") return cmd_search(cfg);
  if (cfg.command == "search-near") return cmd_search_near(cfg);
  if (cfg.command == "median") return cmd_median(cfg);
  if (cfg.command == "mean") return cmd_mean(cfg);
  if (cfg.command == "amplify-circuit") return cmd_amplify_circuit(cfg);
  if (cfg.command == "bench") return cmd_bench(cfg);
  throw ParseError("unknown command: " + cfg.command);
}

}  // namespace qamp::cli
