// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qcut/encoding.hpp"
#include "qcut/fermion.hpp"
#include "support/dense.hpp"

using namespace qcut;

namespace {

FermionSum random_sum(std::mt19937_64& rng, int n_modes, int n_terms, int max_ops) {
  std::uniform_int_distribution<int> mode(0, n_modes - 1);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> ops(1, max_ops);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  FermionSum f;
  for (int t = 0; t < n_terms; ++t) {
    FermionTerm term;
    term.coefficient = Complex{coeff(rng), coeff(rng)};
    const int n_ops = ops(rng);
    for (int k = 0; k < n_ops; ++k)
      term.ops.push_back({mode(rng), static_cast<LadderKind>(kind(rng))});
    f += term;
  }
  return f;
}

}  // namespace

TEST_CASE("build_hamiltonian: single orbital identity case") {
  const FermionSum h = build_hamiltonian({1.0}, {0.0}, 0.0, 1);
  REQUIRE(h.terms.size() == 2);
  for (const auto& term : h.terms) {
    CHECK(term.coefficient.real() == doctest::Approx(1.0));
    REQUIRE(term.ops.size() == 2);
    CHECK(term.ops[0].kind == LadderKind::create);
    CHECK(term.ops[1].kind == LadderKind::annihilate);
    CHECK(term.ops[0].mode == term.ops[1].mode);
  }
}

TEST_CASE("build_hamiltonian: nuclear repulsion only") {
  const FermionSum h = build_hamiltonian({0.0}, {0.0}, 0.7137, 1);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms[0].ops.empty());
  CHECK(h.terms[0].coefficient.real() == doctest::Approx(0.7137));
}

TEST_CASE("build_hamiltonian: random two-orbital operator is Hermitian under JW") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> h(4), g(16);
  // Symmetric one-body part; keep the full 8-fold alignment for g so the
  // operator is Hermitian.
  h[0] = u(rng);
  h[3] = u(rng);
  h[1] = h[2] = u(rng);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          auto& ref = g[static_cast<std::size_t>(((p * 2 + q) * 2 + r) * 2 + s)];
          ref = 0.0;
        }
  auto set8 = [&](int p, int q, int r, int s, double v) {
    auto idx = [](int a, int b, int c, int d) {
      return static_cast<std::size_t>(((a * 2 + b) * 2 + c) * 2 + d);
    };
    for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s},
                              std::array{p, q, s, r}, std::array{q, p, s, r},
                              std::array{r, s, p, q}, std::array{s, r, p, q},
                              std::array{r, s, q, p}, std::array{s, r, q, p}})
      g[idx(a, b, c, d)] = v;
  };
  set8(0, 0, 0, 0, u(rng));
  set8(1, 1, 1, 1, u(rng));
  set8(0, 0, 1, 1, u(rng));
  set8(0, 1, 0, 1, u(rng));

  const FermionSum ham = build_hamiltonian(h, g, u(rng), 2);
  const dense::Mat m = dense::fermion_matrix(ham, 4);
  CHECK(dense::max_abs_diff(m, dense::dagger(m)) < 1e-12);
}

TEST_CASE("build_hamiltonian: dimension mismatch") {
  CHECK_THROWS_AS(build_hamiltonian({1.0, 0.0}, {0.0}, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian({1.0}, std::vector<double>(3, 0.0), 0.0, 1),
                  std::invalid_argument);
}

TEST_CASE("make_singles_doubles: zero amplitudes give an empty sum") {
  CHECK(make_singles_doubles(AmplitudeSet{}, 2, 2).empty());
}

TEST_CASE("make_singles_doubles: H2 has 2 singles and 1 double excitation") {
  AmplitudeSet amps;
  amps.singles[{0, 1}] = 0.1;
  amps.doubles[{0, 0, 1, 1}] = 0.2;
  const auto excitations = singles_doubles_excitations(amps, 2, 2, QubitOrdering::spatial_blocked);
  int singles = 0, doubles = 0;
  for (const auto& e : excitations) (e.ops.size() == 2 ? singles : doubles)++;
  CHECK(singles == 2);
  CHECK(doubles == 1);

  const FermionSum f = make_singles_doubles(amps, 2, 2);
  CHECK(f.terms.size() == 3);
}

TEST_CASE("make_singles_doubles: (4,4) term count matches brute-force enumeration") {
  // Independent oracle: enumerate spin-orbitals directly and count
  // S_z-conserving i<j, a<b quadruples plus same-spin singles.
  const int n_spatial = 4, n_elec = 4;
  const int n_occ = n_elec / 2;
  struct SO {
    int spatial;
    int sz;  // +1 alpha, -1 beta
  };
  std::vector<SO> occ, virt;
  for (int s = 0; s < n_occ; ++s) {
    occ.push_back({s, 1});
    occ.push_back({s, -1});
  }
  for (int s = n_occ; s < n_spatial; ++s) {
    virt.push_back({s, 1});
    virt.push_back({s, -1});
  }
  std::size_t expected = 0;
  for (const auto& i : occ)
    for (const auto& a : virt)
      if (i.sz == a.sz) ++expected;  // singles
  for (std::size_t j = 0; j < occ.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t b = 0; b < virt.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
          if (occ[i].sz + occ[j].sz == virt[a].sz + virt[b].sz) ++expected;

  const auto excitations =
      singles_doubles_excitations(AmplitudeSet{}, n_elec, n_spatial, QubitOrdering::spatial_blocked);
  CHECK(excitations.size() == expected);
}

TEST_CASE("make_singles_doubles: amplitude index out of range") {
  AmplitudeSet amps;
  amps.singles[{1, 0}] = 0.5;  // occupied slot used as virtual
  CHECK_THROWS_AS(make_singles_doubles(amps, 2, 2), std::out_of_range);
}

TEST_CASE("make_pair_doubles: H2 has exactly one pair term") {
  AmplitudeSet amps;
  amps.pair_doubles[{0, 1}] = 0.3;
  const FermionSum f = make_pair_doubles(amps, 2, 2);
  REQUIRE(f.terms.size() == 1);
  REQUIRE(f.terms[0].ops.size() == 4);
  // a+_{1a} a+_{1b} a_{0b} a_{0a} under spatial-blocked flattening.
  CHECK(f.terms[0].ops[0] == creation(2));
  CHECK(f.terms[0].ops[1] == creation(3));
  CHECK(f.terms[0].ops[2] == annihilation(1));
  CHECK(f.terms[0].ops[3] == annihilation(0));
}

TEST_CASE("make_pair_doubles: (10,10) has 25 pair excitations") {
  CHECK(pair_double_excitations(AmplitudeSet{}, 10, 10, QubitOrdering::spatial_blocked).size() ==
        25);
}

TEST_CASE("make_pair_doubles: zero amplitudes simplify away") {
  CHECK(make_pair_doubles(AmplitudeSet{}, 10, 10).empty());
}

TEST_CASE("make_generalized_cluster: diagonal t gives a number-operator-like sum") {
  AmplitudeSet amps;
  for (int m = 0; m < 4; ++m) amps.generalized_singles[{m, m}] = 1.0;
  const FermionSum f = make_generalized_cluster(amps, 2);
  REQUIRE(f.terms.size() == 4);
  for (const auto& t : f.terms) {
    CHECK(t.coefficient.real() == doctest::Approx(0.5));
    REQUIRE(t.ops.size() == 2);
    CHECK(t.ops[0].mode == t.ops[1].mode);
    CHECK(t.ops[0].kind == LadderKind::create);
    CHECK(t.ops[1].kind == LadderKind::annihilate);
  }
}

TEST_CASE("make_generalized_cluster: n_spatial=2 generalized singles fill 16 slots") {
  AmplitudeSet amps;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) amps.generalized_singles[{p, q}] = u(rng);
  const FermionSum f = make_generalized_cluster(amps, 2);
  CHECK(f.terms.size() == 16);
}

TEST_CASE("make_generalized_cluster: anti_hermitian image is anti-Hermitian (dense)") {
  AmplitudeSet amps;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) amps.generalized_singles[{p, q}] = u(rng);
  const FermionSum t = make_generalized_cluster(amps, 1);
  const FermionSum a = anti_hermitian(t);
  const dense::Mat m = dense::fermion_matrix(a, 2);
  const dense::Mat neg = dense::scale(dense::dagger(m), {-1.0, 0.0});
  CHECK(dense::max_abs_diff(m, neg) < 1e-12);
}

TEST_CASE("make_generalized_cluster: mode out of range") {
  AmplitudeSet amps;
  amps.generalized_singles[{0, 4}] = 1.0;
  CHECK_THROWS_AS(make_generalized_cluster(amps, 2), std::out_of_range);
}

TEST_CASE("anti_hermitian: single term") {
  FermionSum t;
  t += FermionTerm{{1.0, 0.0}, {creation(1), annihilation(0)}};
  const FermionSum a = simplify(anti_hermitian(t));
  REQUIRE(a.terms.size() == 2);
  // a+_1 a_0 - a+_0 a_1 in lexicographic term order.
  CHECK(a.terms[0].ops == std::vector<LadderOp>{creation(0), annihilation(1)});
  CHECK(a.terms[0].coefficient.real() == doctest::Approx(-1.0));
  CHECK(a.terms[1].ops == std::vector<LadderOp>{creation(1), annihilation(0)});
  CHECK(a.terms[1].coefficient.real() == doctest::Approx(1.0));
}

TEST_CASE("anti_hermitian: applied to an anti-Hermitian input doubles its dense matrix") {
  std::mt19937_64 rng(17);
  const FermionSum t = random_sum(rng, 3, 4, 3);
  const FermionSum already = anti_hermitian(t);  // anti-Hermitian by construction
  const dense::Mat once = dense::fermion_matrix(already, 3);
  const dense::Mat twice = dense::fermion_matrix(anti_hermitian(already), 3);
  CHECK(dense::max_abs_diff(twice, dense::scale(once, {2.0, 0.0})) < 1e-12);
}

TEST_CASE("anti_hermitian: empty input") {
  CHECK(anti_hermitian(FermionSum{}).empty());
}

TEST_CASE("simplify: merges duplicate terms") {
  FermionSum f;
  f += FermionTerm{{1.0, 0.0}, {creation(0), annihilation(1)}};
  f += FermionTerm{{1.0, 0.0}, {creation(0), annihilation(1)}};
  const FermionSum s = simplify(f);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coefficient.real() == doctest::Approx(2.0));
}

TEST_CASE("simplify: drops near-zero coefficients") {
  FermionSum f;
  f += FermionTerm{{1e-16, 0.0}, {creation(0)}};
  CHECK(simplify(f).empty());
}

TEST_CASE("simplify: idempotent and order-insensitive on random sums") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    FermionSum f = random_sum(rng, 4, 12, 4);
    const FermionSum once = simplify(f);
    const FermionSum twice = simplify(once);
    REQUIRE(once.terms.size() == twice.terms.size());
    for (std::size_t i = 0; i < once.terms.size(); ++i) {
      CHECK(once.terms[i].ops == twice.terms[i].ops);
      CHECK(std::abs(once.terms[i].coefficient - twice.terms[i].coefficient) < 1e-15);
    }

    std::shuffle(f.terms.begin(), f.terms.end(), rng);
    const FermionSum permuted = simplify(f);
    REQUIRE(once.terms.size() == permuted.terms.size());
    for (std::size_t i = 0; i < once.terms.size(); ++i) {
      CHECK(once.terms[i].ops == permuted.terms[i].ops);
      CHECK(std::abs(once.terms[i].coefficient - permuted.terms[i].coefficient) < 1e-12);
    }
  }
}

TEST_CASE("cluster generators are anti-Hermitian at the dense level (<=3 spatial orbitals)") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-0.5, 0.5);

  AmplitudeSet amps;
  amps.singles[{0, 1}] = u(rng);
  amps.singles[{0, 2}] = u(rng);
  amps.doubles[{0, 0, 1, 1}] = u(rng);
  amps.doubles[{0, 0, 1, 2}] = u(rng);
  amps.pair_doubles[{0, 1}] = u(rng);
  amps.pair_doubles[{0, 2}] = u(rng);

  AmplitudeSet gen;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      gen.generalized_singles[{p, q}] = u(rng);
      gen.generalized_doubles[{p, q, (p + 1) % 6, (q + 3) % 6}] = u(rng);
    }

  for (const FermionSum& t : {make_singles_doubles(amps, 2, 3), make_pair_doubles(amps, 2, 3),
                              make_generalized_cluster(gen, 3)}) {
    const dense::Mat m = dense::fermion_matrix(anti_hermitian(t), 6);
    CHECK(dense::max_abs_diff(m, dense::scale(dense::dagger(m), {-1.0, 0.0})) < 1e-12);
  }
}

TEST_CASE("pair doubles are a subset of the S_z-conserving doubles index space") {
  AmplitudeSet amps;
  amps.pair_doubles[{0, 1}] = 0.25;
  amps.doubles[{0, 0, 1, 1}] = 0.25;
  const FermionSum pairs = make_pair_doubles(amps, 2, 2);
  const FermionSum alldoubles = make_singles_doubles(amps, 2, 2);

  for (const auto& p : pairs.terms) {
    // The same excitation appears in the full doubles set with a matched
    // coefficient magnitude; the ordered (a<b, i<j) convention of that set
    // can flip the operator sign.
    bool found = false;
    for (const auto& d : alldoubles.terms) {
      if (d.ops.size() != 4) continue;
      const dense::Mat mp = dense::fermion_matrix(FermionSum{{p}}, 4);
      const dense::Mat md = dense::fermion_matrix(FermionSum{{d}}, 4);
      if (dense::max_abs_diff(mp, md) < 1e-12 ||
          dense::max_abs_diff(mp, dense::scale(md, {-1.0, 0.0})) < 1e-12)
        found = true;
    }
    CHECK(found);
  }
}
