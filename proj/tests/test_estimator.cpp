// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcut/ansatz.hpp"
#include "qcut/estimator.hpp"
#include "qcut/simulator.hpp"
#include "qcut/synthesis.hpp"

using namespace qcut;

namespace {

Circuit bell() {
  Circuit c(2);
  c.h(0);
  c.cx(0, 1);
  return c;
}

PauliSum zz_observable(int n) {
  PauliSum o(n);
  o += PauliString{{1.0, 0.0}, {{0, PauliAxis::Z}, {1, PauliAxis::Z}}};
  return o;
}

PauliSum random_observable(std::mt19937_64& rng, int n, int n_terms) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> axis(1, 3);
  PauliSum o(n);
  for (int t = 0; t < n_terms; ++t) {
    PauliString term;
    term.coefficient = Complex{u(rng), 0.0};
    for (int q = 0; q < n; ++q)
      if (u(rng) > 0.2) term.axes[q] = static_cast<PauliAxis>(axis(rng));
    o += term;
  }
  return o;
}

}  // namespace

TEST_CASE("CounterRng: deterministic per key, uniform-ish output") {
  CounterRng a(42, 0, 7), b(42, 0, 7), c(42, 1, 7);
  double mean = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double va = a.next_double();
    CHECK(va == b.next_double());
    mean += va;
  }
  mean /= 1000.0;
  CHECK(std::abs(mean - 0.5) < 0.05);
  CHECK(a.next_double() != c.next_double());
}

TEST_CASE("exact_reconstruction: zero cuts equals the plain expectation") {
  Circuit c(3);
  c.h(0);
  c.cx(0, 1);
  c.ry(2, 0.9);
  std::mt19937_64 rng(113);
  const PauliSum o = random_observable(rng, 3, 4);
  const Partition p({0, 0, 1});
  CHECK(exact_reconstruction(c, p, o) ==
        doctest::Approx(expectation(simulate(c), o)).epsilon(1e-10));
}

TEST_CASE("exact_reconstruction: Bell circuit cut at the CX") {
  CHECK(exact_reconstruction(bell(), Partition({0, 1}), zz_observable(2)) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exact_reconstruction: H2 lucj with random angles, random observables") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 5; ++trial) {
    const auto params = LucjParameters::synthetic(2, 1, 0.8, 900 + trial);
    const Circuit c = lucj(2, 2, params, Layout::all_to_all);  // 2 CP cuts
    const Partition p({0, 0, 1, 1});                           // alpha | beta
    const PauliSum o = random_observable(rng, 4, 5);
    const double uncut = expectation(simulate(c), o);
    CHECK(exact_reconstruction(c, p, o) == doctest::Approx(uncut).epsilon(1e-8));
  }
}

TEST_CASE("exact_reconstruction: one pair-excitation rotation across occupied|virtual") {
  // A single weight-4 rotation of the pair-double generator crosses the
  // occupied|virtual boundary twice, which fits the enumeration guard; the
  // full H2 upccd circuit (16 crossings) is covered by the sampling path.
  std::mt19937_64 rng(129);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  FermionSum unit;
  unit += FermionTerm{{1.0, 0.0},
                      {creation(2), creation(3), annihilation(1), annihilation(0)}};
  const PauliSum image = encode(anti_hermitian(unit), 4, Encoding::jordan_wigner);
  for (int trial = 0; trial < 5; ++trial) {
    Circuit c = reference_prep(2, 2, QubitOrdering::spatial_blocked, Encoding::jordan_wigner);
    append_pauli_rotation(c, image.terms[static_cast<std::size_t>(trial % image.terms.size())],
                          u(rng));
    const Partition p({0, 0, 1, 1});
    const PauliSum o = random_observable(rng, 4, 5);
    const double uncut = expectation(simulate(c), o);
    CHECK(exact_reconstruction(c, p, o) == doctest::Approx(uncut).epsilon(1e-8));
  }
}

TEST_CASE("exact_reconstruction: guards") {
  Circuit c(2);
  for (int i = 0; i < 7; ++i) c.cz(0, 1);
  CHECK_THROWS_AS(exact_reconstruction(c, Partition({0, 1}), zz_observable(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_reconstruction(bell(), Partition({0, 1}), zz_observable(3)),
                  std::invalid_argument);
  // The H2 upccd circuit crosses occupied|virtual 16 times, past the
  // enumeration guard.
  const Circuit dense_cuts = upccd(2, 2, AmplitudeSet{}, Encoding::jordan_wigner);
  CHECK_THROWS_AS(exact_reconstruction(dense_cuts, Partition({0, 0, 1, 1}), zz_observable(4)),
                  std::invalid_argument);
}

TEST_CASE("exact_reconstruction: the joint register is never materialized") {
  const Circuit c = lucj(2, 2, LucjParameters::synthetic(2, 1, 0.5, 17), Layout::all_to_all);
  reset_simulation_high_water_mark();
  (void)exact_reconstruction(c, Partition({0, 0, 1, 1}), zz_observable(4));
  CHECK(simulation_high_water_mark() == 2);
}

TEST_CASE("mc_estimate: zero cuts returns the exact value with zero stderr") {
  Circuit c(3);
  c.h(0);
  c.rz(0, 0.7);
  c.cx(0, 1);
  const PauliSum o = zz_observable(3);
  EstimatorConfig cfg;
  cfg.shots = 64;
  const ExpectationEstimate est = mc_estimate(c, Partition({0, 0, 1}), o, cfg);
  CHECK(est.kappa_total == doctest::Approx(1.0));
  CHECK(est.stderr_ == doctest::Approx(0.0));
  CHECK(est.value == doctest::Approx(expectation(simulate(c), o)).epsilon(1e-12));
}

TEST_CASE("mc_estimate: Bell/CX cut converges within 5 stderr") {
  EstimatorConfig cfg;
  cfg.shots = 100000;
  cfg.seed = 42;
  const ExpectationEstimate est = mc_estimate(bell(), Partition({0, 1}), zz_observable(2), cfg);
  CHECK(est.kappa_total == doctest::Approx(3.0));
  CHECK(est.samples == 100000);
  CHECK(std::abs(est.value - 1.0) < 5.0 * est.stderr_);
  CHECK(est.stderr_ > 0.0);
}

TEST_CASE("mc_estimate: deterministic for fixed seed and shards") {
  EstimatorConfig cfg;
  cfg.shots = 2000;
  cfg.seed = 7;
  cfg.shards = 3;
  const auto a = mc_estimate(bell(), Partition({0, 1}), zz_observable(2), cfg);
  const auto b = mc_estimate(bell(), Partition({0, 1}), zz_observable(2), cfg);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);

  cfg.shards = 4;  // different stream, still deterministic
  const auto c1 = mc_estimate(bell(), Partition({0, 1}), zz_observable(2), cfg);
  const auto c2 = mc_estimate(bell(), Partition({0, 1}), zz_observable(2), cfg);
  CHECK(c1.value == c2.value);
  CHECK(a.value != c1.value);
}

TEST_CASE("mc_estimate: stderr scales with kappa when adding a second cut") {
  // One versus two crossing CZ gates, with generic single-qubit rotations so
  // every decomposition branch leaves a nonzero block expectation.
  auto build = [](int n_cz) {
    Circuit c(2);
    c.h(0);
    c.h(1);
    for (int i = 0; i < n_cz; ++i) c.cz(0, 1);
    c.ry(0, 0.8);
    c.ry(1, -0.6);
    return c;
  };
  PauliSum o(2);
  o += PauliString{{1.0, 0.0}, {{0, PauliAxis::X}, {1, PauliAxis::X}}};

  double s1 = 0.0, s2 = 0.0;
  for (int repeat = 0; repeat < 4; ++repeat) {
    EstimatorConfig cfg;
    cfg.shots = 40000;
    cfg.seed = 11 + static_cast<std::uint64_t>(repeat);
    const auto est1 = mc_estimate(build(1), Partition({0, 1}), o, cfg);
    const auto est2 = mc_estimate(build(2), Partition({0, 1}), o, cfg);
    CHECK(est1.kappa_total == doctest::Approx(3.0));
    CHECK(est2.kappa_total == doctest::Approx(9.0));
    s1 += est1.stderr_;
    s2 += est2.stderr_;
  }
  const double ratio = s2 / s1;
  CHECK(ratio > 3.0 * 0.75);
  CHECK(ratio < 3.0 * 1.25);
}

TEST_CASE("mc_estimate: unbiased on a cut circuit with a nontrivial observable") {
  std::mt19937_64 rng(131);
  Circuit c(3);
  c.h(0);
  c.ry(1, 0.6);
  c.cx(0, 1);
  c.rzz(1, 2, 0.8);
  c.rx(2, 1.1);
  const Partition p({0, 0, 1});
  const PauliSum o = random_observable(rng, 3, 4);
  const double uncut = expectation(simulate(c), o);

  EstimatorConfig cfg;
  cfg.shots = 200000;
  cfg.seed = 3;
  cfg.shards = 4;
  const auto est = mc_estimate(c, p, o, cfg);
  CHECK(std::abs(est.value - uncut) < 5.0 * est.stderr_);
}

TEST_CASE("shots_for_parity: paper-scale examples") {
  std::vector<CutGate> cuts;
  for (int i = 0; i < 16; ++i) cuts.push_back({0, GateKind::CX, std::nullopt});
  for (int i = 0; i < 2; ++i) cuts.push_back({0, GateKind::CZ, std::nullopt});
  const OverheadReport big = total_overhead(cuts);
  CHECK(shots_for_parity(1e3, big) == doctest::Approx(1.5009e20).epsilon(1e-3));

  std::vector<CutGate> cp_cuts(2, CutGate{0, GateKind::CP, -0.0566});
  const OverheadReport small = total_overhead(cp_cuts);
  CHECK(shots_for_parity(1e4, small) == doctest::Approx(1.2463e4).epsilon(1e-3));

  CHECK(shots_for_parity(777.0, total_overhead({})) == doctest::Approx(777.0));

  std::vector<CutGate> many(400, CutGate{0, GateKind::CX, std::nullopt});
  const OverheadReport saturated = total_overhead(many);
  CHECK(std::isinf(shots_for_parity(1e3, saturated)));
  CHECK(log10_shots_for_parity(1e3, saturated) ==
        doctest::Approx(3.0 + 400.0 * std::log10(9.0)));
}
