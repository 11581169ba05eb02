// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_TOOLS_COMMANDS_HPP
#define QAMP_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qamp/amplify.hpp"
#include "qamp/json_doc.hpp"
#include "qamp/types.hpp"

namespace qamp::cli {

inline constexpr std::uint64_t kDefaultMaxDim = 1ULL << 20;

/// Everything a single command invocation needs; one instance per seed
/// when --repeat fans out.
struct RunConfig {
  std::string command;
  unsigned n = 0;
  std::string target_token;
  std::string start_token;   // search: optional start basis state
  std::string known_token;   // search-near: the known word
  std::optional<unsigned> k;
  std::optional<double> alpha;
  std::string values_path;
  std::string circuit_path;
  double epsilon = 0.0;
  std::optional<double> epsilon_0;
  std::uint64_t shots = 1;
  std::optional<std::uint64_t> eta_override;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::uint64_t max_dim = kDefaultMaxDim;
  std::uint64_t trials = 32;  // bench
  bool timing = false;
};

/// "0110"-style tokens (length must equal n, leftmost bit is the
/// most-significant qubit) or plain decimal. Malformed tokens are parse
/// errors; values at or above 2^n are contract violations.
BasisIndex parse_state_token(const std::string& token, unsigned n);

std::string to_bitstring(BasisIndex value, unsigned n);

JsonDoc cmd_search(const RunConfig& cfg);
JsonDoc cmd_search_near(const RunConfig& cfg);
JsonDoc cmd_median(const RunConfig& cfg);
JsonDoc cmd_mean(const RunConfig& cfg);
JsonDoc cmd_amplify_circuit(const RunConfig& cfg);
JsonDoc cmd_bench(const RunConfig& cfg);

/// CSV with header iter,a_s_re,a_s_im,a_t_re,a_t_im,residual and one row
/// per recorded iteration; written atomically enough to be byte-stable
/// across identical runs.
void write_trace(const IterationTrace& trace, const std::string& path);

/// Dispatches on cfg.command.
JsonDoc run_command(const RunConfig& cfg);

}  // namespace qamp::cli

#endif  // QAMP_TOOLS_COMMANDS_HPP
