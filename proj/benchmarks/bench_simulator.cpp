// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "qcut/simulator.hpp"

namespace {

qcut::Circuit layered_circuit(int n_qubits, int layers) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  qcut::Circuit c(n_qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) c.ry(q, angle(rng));
    for (int q = 0; q + 1 < n_qubits; q += 2) c.cx(q, q + 1);
    for (int q = 1; q + 1 < n_qubits; q += 2) c.cz(q, q + 1);
  }
  return c;
}

void BM_Simulate(benchmark::State& state) {
  const auto c = layered_circuit(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    auto psi = qcut::simulate(c);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = qcut::simulate(layered_circuit(n, 8));
  qcut::PauliSum o(n);
  qcut::PauliString zz{{1.0, 0.0}, {}};
  for (int q = 0; q < n; ++q) zz.axes[q] = qcut::PauliAxis::Z;
  o += zz;
  for (auto _ : state) benchmark::DoNotOptimize(qcut::expectation(psi, o));
}

}  // namespace

BENCHMARK(BM_Simulate)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_Expectation)->Arg(10)->Arg(14)->Arg(18);

BENCHMARK_MAIN();
