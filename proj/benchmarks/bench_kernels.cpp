// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "qamp/amplify.hpp"
#include "qamp/linear_op.hpp"
#include "qamp/sampling.hpp"
#include "qamp/transforms.hpp"

namespace {

using namespace qamp;

void BM_WalshHadamardApply(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  LinearOp w = walsh_hadamard(n);
  StateVector v = StateVector::basis(1ULL << n, 0);
  for (auto _ : state) {
    v = apply(w, v);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_WalshHadamardApply)->DenseRange(8, 18, 2)->Complexity();

void BM_QIteration(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  AmplificationProblem p(walsh_hadamard(n), 0, (1ULL << n) - 1);
  LinearOp q = build_q(p);
  StateVector v = StateVector::basis(1ULL << n, 0);
  for (auto _ : state) {
    v = apply(q, v);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_QIteration)->DenseRange(8, 16, 2)->Complexity();

void BM_BornSample(benchmark::State& state) {
  const unsigned n = 12;
  LinearOp w = walsh_hadamard(n);
  StateVector v = apply(w, StateVector::basis(1ULL << n, 0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    double f = born_sample(v, {7}, static_cast<std::uint64_t>(state.range(0)), seed++);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_BornSample)->Arg(256)->Arg(4096)->Arg(65536);

void BM_Materialize(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  LinearOp w = walsh_hadamard(n);
  for (auto _ : state) {
    DenseMatrix m = materialize(w);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_Materialize)->DenseRange(4, 10, 2);

}  // namespace
