// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "qamp/statistics.hpp"

namespace {

using namespace qamp;

DataSet ramp(unsigned n) {
  std::vector<double> v(1ULL << n);
  for (std::size_t a = 0; a < v.size(); ++a)
    v[a] = static_cast<double>(a) / static_cast<double>(v.size());
  return DataSet::from_values(std::move(v), ValueRange::kUnit);
}

DataSet centered(unsigned n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> du(-0.4, 0.4);
  std::vector<double> v(1ULL << n);
  for (double& x : v) x = du(gen);
  return DataSet::from_values(std::move(v), ValueRange::kCentered);
}

void BM_EstimateMedian(benchmark::State& state) {
  DataSet d = ramp(static_cast<unsigned>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    MedianReport rep = estimate_median(d, 0.05, seed++);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_EstimateMedian)->Arg(8)->Arg(10)->Arg(12);

void BM_EstimateMean(benchmark::State& state) {
  DataSet d = centered(static_cast<unsigned>(state.range(0)), 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    MeanReport rep = estimate_mean(d, 0.02, seed++);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_EstimateMean)->Arg(4)->Arg(6)->Arg(8);

void BM_EpsilonStage(benchmark::State& state) {
  DataSet d = ramp(10);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    MedianRun r = estimate_epsilon(d, 0.47, 0.02, 256, seed++);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EpsilonStage);

}  // namespace
