// SPDX-License-Identifier: Apache-2.0
#include "qcut/fermion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcut {

namespace {

double map_get(const std::map<std::pair<int, int>, double>& m, int a, int b) {
  auto it = m.find({a, b});
  return it == m.end() ? 0.0 : it->second;
}

double map_get(const std::map<std::array<int, 4>, double>& m, int a, int b, int c, int d) {
  auto it = m.find({a, b, c, d});
  return it == m.end() ? 0.0 : it->second;
}

}  // namespace

FermionTerm FermionTerm::adjoint() const {
  FermionTerm out;
  out.coefficient = std::conj(coefficient);
  out.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.ops.push_back({it->mode, it->kind == LadderKind::create ? LadderKind::annihilate
                                                                : LadderKind::create});
  }
  return out;
}

int FermionTerm::max_mode() const {
  int m = -1;
  for (const auto& op : ops) m = std::max(m, op.mode);
  return m;
}

FermionSum& FermionSum::operator+=(const FermionSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

int FermionSum::max_mode() const {
  int m = -1;
  for (const auto& t : terms) m = std::max(m, t.max_mode());
  return m;
}

FermionSum simplify(const FermionSum& f) {
  std::map<std::vector<LadderOp>, Complex> merged;
  for (const auto& t : f.terms) merged[t.ops] += t.coefficient;

  FermionSum out;
  for (auto& [ops, coeff] : merged) {
    if (std::abs(coeff) < kCoefficientZeroTol) continue;
    out.terms.push_back({coeff, ops});
  }
  return out;
}

FermionSum anti_hermitian(const FermionSum& t) {
  FermionSum out;
  out.terms.reserve(2 * t.terms.size());
  for (const auto& term : t.terms) {
    out.terms.push_back(term);
    auto adj = term.adjoint();
    adj.coefficient = -adj.coefficient;
    out.terms.push_back(adj);
  }
  return out;
}

double AmplitudeSet::single(int i, int a) const { return map_get(singles, i, a); }
double AmplitudeSet::double_amp(int i, int j, int a, int b) const {
  return map_get(doubles, i, j, a, b);
}
double AmplitudeSet::pair_double(int i, int a) const { return map_get(pair_doubles, i, a); }
double AmplitudeSet::generalized_single(int p, int q) const {
  return map_get(generalized_singles, p, q);
}
double AmplitudeSet::generalized_double(int p, int q, int r, int s) const {
  return map_get(generalized_doubles, p, q, r, s);
}

OccupationVector reference_occupation(int n_elec, int n_spatial, QubitOrdering ordering) {
  if (n_elec < 0 || n_elec > 2 * n_spatial)
    throw std::invalid_argument("electron count out of range");
  if (n_elec % 2 != 0)
    throw std::invalid_argument("odd electron counts are not supported (closed shell only)");
  OccupationVector occ;
  occ.bits.assign(2 * static_cast<std::size_t>(n_spatial), 0);
  for (int s = 0; s < n_elec / 2; ++s) {
    occ.bits[static_cast<std::size_t>(mode_index({s, Spin::alpha}, ordering, n_spatial))] = 1;
    occ.bits[static_cast<std::size_t>(mode_index({s, Spin::beta}, ordering, n_spatial))] = 1;
  }
  return occ;
}

FermionSum build_hamiltonian(const std::vector<double>& h, const std::vector<double>& g,
                             double h_nuc, int n_spatial, QubitOrdering ordering) {
  const auto n = static_cast<std::size_t>(n_spatial);
  if (h.size() != n * n) throw std::invalid_argument("one-body tensor has wrong size");
  if (g.size() != n * n * n * n) throw std::invalid_argument("two-body tensor has wrong size");

  auto mode = [&](int spatial, Spin s) { return mode_index({spatial, s}, ordering, n_spatial); };
  constexpr Spin spins[2] = {Spin::alpha, Spin::beta};

  FermionSum out;
  if (h_nuc != 0.0) out += FermionTerm{Complex{h_nuc, 0.0}, {}};

  for (int p = 0; p < n_spatial; ++p)
    for (int q = 0; q < n_spatial; ++q) {
      const double hpq = h[static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)];
      if (hpq == 0.0) continue;
      for (Spin s : spins)
        out += FermionTerm{Complex{hpq, 0.0},
                           {creation(mode(p, s)), annihilation(mode(q, s))}};
    }

  for (int p = 0; p < n_spatial; ++p)
    for (int q = 0; q < n_spatial; ++q)
      for (int r = 0; r < n_spatial; ++r)
        for (int s = 0; s < n_spatial; ++s) {
          const double gpqrs =
              g[((static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)) * n +
                 static_cast<std::size_t>(r)) *
                    n +
                static_cast<std::size_t>(s)];
          if (gpqrs == 0.0) continue;
          for (Spin sp : spins)
            for (Spin sr : spins)
              out += FermionTerm{Complex{0.5 * gpqrs, 0.0},
                                 {creation(mode(p, sp)), creation(mode(r, sr)),
                                  annihilation(mode(s, sr)), annihilation(mode(q, sp))}};
        }
  return simplify(out);
}

std::vector<Excitation> singles_doubles_excitations(const AmplitudeSet& amps, int n_elec,
                                                    int n_spatial, QubitOrdering ordering) {
  if (n_elec % 2 != 0) throw std::invalid_argument("odd electron counts are not supported");
  const int n_occ = n_elec / 2;
  for (const auto& [key, value] : amps.singles) {
    (void)value;
    if (key.first < 0 || key.first >= n_occ || key.second < n_occ || key.second >= n_spatial)
      throw std::out_of_range("singles amplitude index outside occupied/virtual ranges");
  }
  for (const auto& [key, value] : amps.doubles) {
    (void)value;
    if (key[0] < 0 || key[0] >= n_occ || key[1] < 0 || key[1] >= n_occ || key[2] < n_occ ||
        key[2] >= n_spatial || key[3] < n_occ || key[3] >= n_spatial)
      throw std::out_of_range("doubles amplitude index outside occupied/virtual ranges");
  }

  constexpr Spin spins[2] = {Spin::alpha, Spin::beta};
  auto mode = [&](int spatial, Spin s) { return mode_index({spatial, s}, ordering, n_spatial); };

  std::vector<Excitation> out;
  // Singles: same-spin occupied -> virtual promotions.
  for (int i = 0; i < n_occ; ++i)
    for (int a = n_occ; a < n_spatial; ++a)
      for (Spin s : spins)
        out.push_back({{creation(mode(a, s)), annihilation(mode(i, s))}, amps.single(i, a)});

  // Doubles: spin-orbital pairs i<j occupied, a<b virtual with matched S_z.
  struct SpinOrb {
    int spatial;
    Spin spin;
    int mode;
  };
  std::vector<SpinOrb> occ, virt;
  for (int i = 0; i < n_occ; ++i)
    for (Spin s : spins) occ.push_back({i, s, mode(i, s)});
  for (int a = n_occ; a < n_spatial; ++a)
    for (Spin s : spins) virt.push_back({a, s, mode(a, s)});
  auto sz = [](Spin s) { return s == Spin::alpha ? 1 : -1; };

  for (std::size_t j = 0; j < occ.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t b = 0; b < virt.size(); ++b)
        for (std::size_t a = 0; a < b; ++a) {
          if (sz(occ[i].spin) + sz(occ[j].spin) != sz(virt[a].spin) + sz(virt[b].spin)) continue;
          const double t =
              amps.double_amp(occ[i].spatial, occ[j].spatial, virt[a].spatial, virt[b].spatial);
          out.push_back({{creation(virt[a].mode), creation(virt[b].mode),
                          annihilation(occ[i].mode), annihilation(occ[j].mode)},
                         t});
        }
  return out;
}

std::vector<Excitation> pair_double_excitations(const AmplitudeSet& amps, int n_elec,
                                                int n_spatial, QubitOrdering ordering) {
  if (n_elec % 2 != 0) throw std::invalid_argument("odd electron counts are not supported");
  const int n_occ = n_elec / 2;
  for (const auto& [key, value] : amps.pair_doubles) {
    (void)value;
    if (key.first < 0 || key.first >= n_occ || key.second < n_occ || key.second >= n_spatial)
      throw std::out_of_range("pair-double amplitude index outside occupied/virtual ranges");
  }
  auto mode = [&](int spatial, Spin s) { return mode_index({spatial, s}, ordering, n_spatial); };

  std::vector<Excitation> out;
  for (int i = 0; i < n_occ; ++i)
    for (int a = n_occ; a < n_spatial; ++a)
      out.push_back({{creation(mode(a, Spin::alpha)), creation(mode(a, Spin::beta)),
                      annihilation(mode(i, Spin::beta)), annihilation(mode(i, Spin::alpha))},
                     amps.pair_double(i, a)});
  return out;
}

std::vector<Excitation> generalized_single_excitations(const AmplitudeSet& amps, int n_spatial,
                                                       QubitOrdering ordering) {
  for (const auto& [key, value] : amps.singles) {
    (void)value;
    if (key.first < 0 || key.first >= n_spatial || key.second < 0 || key.second >= n_spatial)
      throw std::out_of_range("generalized singles amplitude index outside the spatial range");
  }
  auto mode = [&](int spatial, Spin s) { return mode_index({spatial, s}, ordering, n_spatial); };
  constexpr Spin spins[2] = {Spin::alpha, Spin::beta};

  std::vector<Excitation> out;
  for (Spin s : spins)
    for (int p = 0; p < n_spatial; ++p)
      for (int q = p + 1; q < n_spatial; ++q)
        out.push_back({{creation(mode(q, s)), annihilation(mode(p, s))}, amps.single(p, q)});
  return out;
}

FermionSum make_singles_doubles(const AmplitudeSet& amps, int n_elec, int n_spatial,
                                QubitOrdering ordering) {
  FermionSum out;
  for (const auto& exc : singles_doubles_excitations(amps, n_elec, n_spatial, ordering))
    out += FermionTerm{Complex{exc.amplitude, 0.0}, exc.ops};
  return simplify(out);
}

FermionSum make_pair_doubles(const AmplitudeSet& amps, int n_elec, int n_spatial,
                             QubitOrdering ordering) {
  FermionSum out;
  for (const auto& exc : pair_double_excitations(amps, n_elec, n_spatial, ordering))
    out += FermionTerm{Complex{exc.amplitude, 0.0}, exc.ops};
  return simplify(out);
}

FermionSum make_generalized_cluster(const AmplitudeSet& amps, int n_spatial,
                                    QubitOrdering ordering) {
  (void)ordering;  // amplitudes are already keyed by flattened mode
  const int n_modes = 2 * n_spatial;
  auto check = [&](int m) {
    if (m < 0 || m >= n_modes) throw std::out_of_range("generalized amplitude mode out of range");
  };
  for (const auto& [key, value] : amps.generalized_singles) {
    (void)value;
    check(key.first);
    check(key.second);
  }
  for (const auto& [key, value] : amps.generalized_doubles) {
    (void)value;
    for (int m : key) check(m);
  }

  FermionSum out;
  for (const auto& [key, t] : amps.generalized_singles) {
    const auto [p, q] = key;
    out += FermionTerm{Complex{0.5 * t, 0.0}, {creation(q), annihilation(p)}};
  }
  for (const auto& [key, t] : amps.generalized_doubles) {
    const auto [p, q, r, s] = std::tuple{key[0], key[1], key[2], key[3]};
    out += FermionTerm{Complex{0.25 * t, 0.0},
                       {creation(r), creation(s), annihilation(q), annihilation(p)}};
  }
  return simplify(out);
}

}  // namespace qcut
