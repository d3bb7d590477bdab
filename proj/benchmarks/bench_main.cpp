// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "ipmlab/barrier.hpp"
#include "ipmlab/centering.hpp"
#include "ipmlab/corollary_audit.hpp"
#include "ipmlab/experiment.hpp"
#include "ipmlab/linear_program.hpp"
#include "ipmlab/neighborhood.hpp"
#include "ipmlab/short_step.hpp"

namespace {

using namespace ipmlab;

void BM_BarrierDerivatives(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinearProgram lp = generate_lw({r, 10.0});
  const Barrier bar = Barrier::logarithmic(lp.m());
  const Vector x = *lp.interior_witness();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_barrier_derivatives(lp, bar, x));
  }
}
BENCHMARK(BM_BarrierDerivatives)->DenseRange(2, 6, 2);

void BM_Center(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinearProgram lp = generate_lw({r, 10.0});
  const Barrier bar = Barrier::logarithmic(lp.m());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        center(lp, bar, Mu::finite(1.0), *lp.interior_witness()));
  }
}
BENCHMARK(BM_Center)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_MatchEta(benchmark::State& state) {
  const LinearProgram lp = generate_lw({3, 10.0});
  PathSearcher searcher(lp, Barrier::logarithmic(lp.m()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_eta(lp, searcher, 0.37));
  }
}
BENCHMARK(BM_MatchEta)->Unit(benchmark::kMicrosecond);

void BM_VertexOracle(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinearProgram lp = generate_lw({r, 10.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_value_oracle(lp));
  }
  state.SetLabel(std::to_string(binomial(lp.m(), lp.n())) + " bases");
}
BENCHMARK(BM_VertexOracle)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

void BM_SolveLp(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinearProgram lp = generate_lw({r, 10.0});
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveLp)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ShortStep(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const LinearProgram lp = generate_lw({r, 10.0});
  const Barrier bar = Barrier::logarithmic(lp.m());
  const AnalyticStart start = analytic_start(lp, bar, kDefaultTheta);
  for (auto _ : state) {
    const ShortStepRun run =
        short_step(lp, bar, start.mu0, start.x0, 1e-4);
    state.counters["K"] = run.steps();
  }
}
BENCHMARK(BM_ShortStep)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
  const LinearProgram lp = generate_lw({2, 10.0});
  const Barrier bar = Barrier::logarithmic(lp.m());
  const AnalyticStart start = analytic_start(lp, bar, kDefaultTheta);
  const ShortStepRun run = short_step(lp, bar, start.mu0, start.x0, 1e-2);
  AuditOptions opts;
  opts.samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit_corollary_chain(run, lp, bar, opts));
  }
}
BENCHMARK(BM_Audit)->Arg(2)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
