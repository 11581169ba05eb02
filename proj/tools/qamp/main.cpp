// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qamp/commands.hpp"
#include "qamp/json_doc.hpp"
#include "qamp/types.hpp"

namespace {

using qamp::cli::JsonDoc;
using qamp::cli::RunConfig;

std::uint64_t default_seed() {
  const char* env = std::getenv("QAMP_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw qamp::ParseError("");
    return v;
  } catch (const std::exception&) {
    throw qamp::ParseError("QAMP_SEED must be an unsigned integer");
  }
}

int emit(const RunConfig& base, const std::string& format, std::uint64_t repeat) {
  if (repeat <= 1) {
    JsonDoc doc = qamp::cli::run_command(base);
    std::fputs(format == "csv" ? doc.dump_csv().c_str() : doc.dump().c_str(), stdout);
    return 0;
  }
  if (!base.trace_path.empty()) {
    throw qamp::ParseError("--trace cannot be combined with --repeat");
  }
  // fan out one thread per seed; output is ordered by seed regardless of
  // completion order
  std::vector<JsonDoc> reports(repeat);
  std::vector<std::exception_ptr> errors(repeat);
  std::vector<std::thread> workers;
  workers.reserve(repeat);
  for (std::uint64_t i = 0; i < repeat; ++i) {
    workers.emplace_back([&, i] {
      try {
        RunConfig cfg = base;
        cfg.seed = base.seed + i;
        reports[i] = qamp::cli::run_command(cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (format == "csv") {
    std::string out = "field,value\n";
    for (std::uint64_t i = 0; i < repeat; ++i) {
      std::string block = reports[i].dump_csv();
      std::istringstream lines(block);
      std::string line;
      std::getline(lines, line);  // skip per-report header
      while (std::getline(lines, line)) {
        out += std::to_string(i) + "." + line + "\n";
      }
    }
    std::fputs(out.c_str(), stdout);
  } else {
    JsonDoc arr = JsonDoc::array();
    for (auto& r : reports) arr.push(std::move(r));
    std::fputs(arr.dump().c_str(), stdout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amplitude-amplification simulator: search, nearby search, "
               "median/mean estimation, and amplification of composed circuits"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::uint64_t repeat = 1;

  auto add_common = [&](CLI::App* sub, bool with_trace) {
    sub->add_option("--seed", cfg.seed, "PRNG seed (default: QAMP_SEED or 0)");
    sub->add_option("--format", format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--repeat", repeat, "fan out this many consecutive seeds")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4096}));
    sub->add_option("--max-dim", cfg.max_dim,
                    "state dimension guard (default 2^20; raising it prints a "
                    "memory warning)");
    sub->add_flag("--timing", cfg.timing, "append elapsed_ms to the report");
    if (with_trace) {
      sub->add_option("--trace", cfg.trace_path,
                      "write the per-iteration trace CSV to this path");
    }
  };

  CLI::App* search = app.add_subcommand("search", "exhaustive search with U = W-H");
  search->add_option("-n,--qubits", cfg.n, "qubit count")->required();
  search->add_option("--target", cfg.target_token, "target state (int or bitstring)")
      ->required();
  search->add_option("--start", cfg.start_token,
                     "start basis state (default |0...0>)");
  search->add_option("--eta", cfg.eta_override, "iteration count override");
  search->add_option("--shots", cfg.shots, "Born samples for the frequency field");
  add_common(search, true);

  CLI::App* near = app.add_subcommand(
      "search-near", "search for a target k bits from a known word");
  near->add_option("-n,--qubits", cfg.n, "qubit count")->required();
  near->add_option("--known", cfg.known_token, "known word (int or bitstring)")
      ->required();
  near->add_option("--target", cfg.target_token, "target state (int or bitstring)")
      ->required();
  near->add_option("--k", cfg.k, "expected Hamming distance (checked)");
  near->add_option("--alpha", cfg.alpha, "gate parameter (default n/k)");
  near->add_option("--eta", cfg.eta_override, "iteration count override");
  near->add_option("--shots", cfg.shots, "Born samples for the frequency field");
  add_common(near, true);

  CLI::App* median = app.add_subcommand("median", "estimate the dataset median");
  median->add_option("--values", cfg.values_path, "values file (text or JSON array)")
      ->required();
  median->add_option("--epsilon", cfg.epsilon, "target imbalance precision")
      ->required();
  median->add_option("--epsilon0", cfg.epsilon_0, "initial epsilon_0 (default 0.5)");
  median->add_option("--shots", cfg.shots, "samples per certification estimate")
      ->default_val(std::uint64_t{256});
  add_common(median, false);

  CLI::App* mean = app.add_subcommand("mean", "estimate the dataset mean");
  mean->add_option("--values", cfg.values_path, "values file (text or JSON array)")
      ->required();
  mean->add_option("--epsilon", cfg.epsilon, "target precision")->required();
  mean->add_option("--epsilon0", cfg.epsilon_0, "initial epsilon_0 (default 0.5)");
  mean->add_option("--shots", cfg.shots, "samples per stage")
      ->default_val(std::uint64_t{256});
  add_common(mean, false);

  CLI::App* amp = app.add_subcommand("amplify-circuit",
                                     "amplify an arbitrary composed circuit");
  amp->add_option("-n,--qubits", cfg.n, "qubit count")->required();
  amp->add_option("--circuit", cfg.circuit_path, "gate-list JSON file")->required();
  amp->add_option("--target", cfg.target_token, "target state")->required();
  amp->add_option("--start", cfg.start_token, "start basis state (default 0)");
  amp->add_option("--shots", cfg.shots, "Born samples for the frequency field");
  add_common(amp, true);

  CLI::App* bench = app.add_subcommand(
      "bench", "classical draws-until-hit baseline vs quantum query count");
  bench->add_option("-n,--qubits", cfg.n, "qubit count")->required();
  bench->add_option("--target", cfg.target_token, "target state")->required();
  bench->add_option("--trials", cfg.trials, "classical trials")->default_val(
      std::uint64_t{32});
  add_common(bench, false);

  try {
    cfg.seed = default_seed();
    app.parse(argc, argv);

    if (cfg.max_dim > qamp::cli::kDefaultMaxDim) {
      std::fprintf(stderr,
                   "qamp: warning: max-dim raised to %llu; a dense state of that "
                   "size needs about %.1f MiB\n",
                   static_cast<unsigned long long>(cfg.max_dim),
                   static_cast<double>(cfg.max_dim) * 16.0 / (1024.0 * 1024.0));
    }
    for (CLI::App* sub : {search, near, median, mean, amp, bench}) {
      if (sub->parsed()) {
        cfg.command = sub->get_name();
        return emit(cfg, format, repeat);
      }
    }
    throw qamp::ParseError("no subcommand given");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  } catch (const qamp::ParseError& e) {
    std::fprintf(stderr, "qamp: %s\n", e.what());
    return 2;
  } catch (const qamp::ResourceLimitError& e) {
    std::fprintf(stderr, "qamp: %s\n", e.what());
    return 4;
  } catch (const qamp::Error& e) {
    std::fprintf(stderr, "qamp: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qamp: internal error: %s\n", e.what());
    return 1;
  }
}
