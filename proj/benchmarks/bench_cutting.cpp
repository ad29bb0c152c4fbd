// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "qcut/ansatz.hpp"
#include "qcut/cutting.hpp"
#include "qcut/estimator.hpp"

namespace {

void BM_FindCutsAndOverhead(benchmark::State& state) {
  const int n_spatial = static_cast<int>(state.range(0));
  const auto c = qcut::upccd(n_spatial, n_spatial, qcut::AmplitudeSet{},
                             qcut::Encoding::jordan_wigner);
  std::vector<int> blocks(static_cast<std::size_t>(2 * n_spatial), 1);
  for (int q = 0; q < n_spatial; ++q) blocks[static_cast<std::size_t>(q)] = 0;
  const qcut::Partition p(blocks);
  for (auto _ : state) {
    const auto report = qcut::total_overhead(qcut::find_cuts(c, p));
    benchmark::DoNotOptimize(report.log10_total);
  }
}

void BM_McEstimate(benchmark::State& state) {
  qcut::Circuit c(2);
  c.h(0);
  c.cx(0, 1);
  qcut::PauliSum o(2);
  o += qcut::PauliString{{1.0, 0.0},
                         {{0, qcut::PauliAxis::Z}, {1, qcut::PauliAxis::Z}}};
  qcut::EstimatorConfig cfg;
  cfg.shots = static_cast<std::uint64_t>(state.range(0));
  cfg.shards = 4;
  const qcut::Partition p({0, 1});
  for (auto _ : state) {
    const auto est = qcut::mc_estimate(c, p, o, cfg);
    benchmark::DoNotOptimize(est.value);
  }
}

}  // namespace

BENCHMARK(BM_FindCutsAndOverhead)->Arg(10)->Arg(30)->Arg(50);
BENCHMARK(BM_McEstimate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
