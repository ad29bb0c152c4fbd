// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "qcut/ansatz.hpp"
#include "qcut/encoding.hpp"

namespace {

void BM_EncodeClusterOperator(benchmark::State& state) {
  const int n_spatial = static_cast<int>(state.range(0));
  const auto enc = state.range(1) == 0 ? qcut::Encoding::jordan_wigner
                                       : qcut::Encoding::bravyi_kitaev;
  qcut::AmplitudeSet amps;
  const auto excitations = qcut::singles_doubles_excitations(
      amps, n_spatial, n_spatial, qcut::QubitOrdering::spatial_blocked);
  for (auto _ : state) {
    std::size_t terms = 0;
    for (const auto& exc : excitations) {
      qcut::FermionSum unit;
      unit += qcut::FermionTerm{{1.0, 0.0}, exc.ops};
      terms += qcut::encode(qcut::anti_hermitian(unit), 2 * n_spatial, enc).terms.size();
    }
    benchmark::DoNotOptimize(terms);
  }
}

void BM_BuildUpccd(benchmark::State& state) {
  const int n_spatial = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto c = qcut::upccd(n_spatial, n_spatial, qcut::AmplitudeSet{},
                               qcut::Encoding::jordan_wigner);
    benchmark::DoNotOptimize(c.gates.size());
  }
}

}  // namespace

BENCHMARK(BM_EncodeClusterOperator)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1});
BENCHMARK(BM_BuildUpccd)->Arg(4)->Arg(10)->Arg(20);
