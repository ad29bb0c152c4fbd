// SPDX-License-Identifier: Apache-2.0
#include "qcut/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "qcut/estimator.hpp"
#include "qcut/synthesis.hpp"

namespace qcut {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

/// Appends the first-order compilation of exp(t (T - T^dagger)) for one
/// unit-coefficient excitation op T. The Pauli terms of a single excitation
/// mutually commute, so this is the exact exponential; with t = 0 the
/// structural gates remain as zero-angle rotations.
void append_excitation(Circuit& c, const std::vector<LadderOp>& ops, double amplitude,
                       Encoding enc, int n_modes) {
  FermionSum unit;
  unit += FermionTerm{Complex{1.0, 0.0}, ops};
  const PauliSum image = encode(anti_hermitian(unit), n_modes, enc);
  for (const auto& t : image.terms) {
    if (t.axes.empty()) continue;
    append_pauli_rotation(c, t, -2.0 * t.coefficient.imag() * amplitude);
  }
}

Circuit build_product_ansatz(int n_elec, int n_spatial, Encoding enc, QubitOrdering ordering,
                             const std::vector<Excitation>& excitations, int reps = 1) {
  const int n_modes = 2 * n_spatial;
  Circuit c = reference_prep(n_elec, n_spatial, ordering, enc);
  for (int r = 0; r < reps; ++r)
    for (const auto& exc : excitations) append_excitation(c, exc.ops, exc.amplitude, enc, n_modes);
  return c;
}

/// Number-conserving Givens rotation between adjacent modes, angle theta.
/// Matches the generic compilation of a+_{p+1} a_p - h.c. gate for gate: the
/// JW image is -i/2 X_p Y_{p+1} + i/2 Y_p X_{p+1} and the two terms commute.
void append_givens(Circuit& c, int lower_mode, double theta) {
  PauliString xy{{1.0, 0.0},
                 {{lower_mode, PauliAxis::X}, {lower_mode + 1, PauliAxis::Y}}};
  PauliString yx{{1.0, 0.0},
                 {{lower_mode, PauliAxis::Y}, {lower_mode + 1, PauliAxis::X}}};
  append_pauli_rotation(c, xy, theta);
  append_pauli_rotation(c, yx, -theta);
}

}  // namespace

Circuit reference_prep(int n_elec, int n_spatial, QubitOrdering ordering, Encoding enc) {
  const OccupationVector occ = reference_occupation(n_elec, n_spatial, ordering);
  const auto bits = encode_reference(occ, enc);
  Circuit c(2 * n_spatial);
  for (int q = 0; q < static_cast<int>(bits.size()); ++q)
    if (bits[static_cast<std::size_t>(q)]) c.x(q);
  return c;
}

Circuit uccsd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
              QubitOrdering ordering) {
  return build_product_ansatz(n_elec, n_spatial, enc, ordering,
                              singles_doubles_excitations(amps, n_elec, n_spatial, ordering));
}

Circuit upccd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
              QubitOrdering ordering) {
  return build_product_ansatz(n_elec, n_spatial, enc, ordering,
                              pair_double_excitations(amps, n_elec, n_spatial, ordering));
}

Circuit upccgsd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
                QubitOrdering ordering, int k) {
  if (k < 1) throw std::invalid_argument("product repetition count must be positive");
  auto excitations = pair_double_excitations(amps, n_elec, n_spatial, ordering);
  auto singles = generalized_single_excitations(amps, n_spatial, ordering);
  excitations.insert(excitations.end(), singles.begin(), singles.end());
  return build_product_ansatz(n_elec, n_spatial, enc, ordering, excitations, k);
}

std::vector<std::pair<int, int>> givens_sweep_pairs(int n_modes) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n_modes)));
  for (int j = 1; j < n_modes; ++j)
    for (int k = j; k >= 1; --k) pairs.emplace_back(k - 1, k);
  return pairs;
}

LucjParameters LucjParameters::zeros(int n_spatial, int n_layers) {
  LucjParameters p;
  p.n_spatial = n_spatial;
  p.layers.resize(static_cast<std::size_t>(n_layers));
  for (auto& layer : p.layers) {
    for (auto& v : layer.givens) v.assign(static_cast<std::size_t>(pair_count(n_spatial)), 0.0);
    for (auto& v : layer.same_spin) v.assign(static_cast<std::size_t>(pair_count(n_spatial)), 0.0);
    layer.opposite_spin.assign(static_cast<std::size_t>(n_spatial), 0.0);
  }
  return p;
}

LucjParameters LucjParameters::uniform(int n_spatial, int n_layers, double angle) {
  LucjParameters p = zeros(n_spatial, n_layers);
  for (auto& layer : p.layers) {
    for (auto& v : layer.givens) std::fill(v.begin(), v.end(), angle);
    for (auto& v : layer.same_spin) std::fill(v.begin(), v.end(), angle);
    std::fill(layer.opposite_spin.begin(), layer.opposite_spin.end(), angle);
  }
  return p;
}

LucjParameters LucjParameters::synthetic(int n_spatial, int n_layers, double sigma,
                                         std::uint64_t seed) {
  LucjParameters p = zeros(n_spatial, n_layers);
  CounterRng rng(seed, 0, 0);
  auto gauss = [&]() {
    // Box-Muller from two counter-driven uniforms.
    const double u1 = std::max(rng.next_double(), 1e-300);
    const double u2 = rng.next_double();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  for (auto& layer : p.layers) {
    for (auto& v : layer.givens)
      for (auto& x : v) x = gauss();
    for (auto& v : layer.same_spin)
      for (auto& x : v) x = gauss();
    for (auto& x : layer.opposite_spin) x = gauss();
  }
  return p;
}

void LucjParameters::validate() const {
  const auto n_pairs = static_cast<std::size_t>(pair_count(n_spatial));
  for (const auto& layer : layers) {
    for (const auto& v : layer.givens)
      if (v.size() != n_pairs) throw std::invalid_argument("givens angle container size mismatch");
    for (const auto& v : layer.same_spin)
      if (v.size() != n_pairs)
        throw std::invalid_argument("same-spin coupling container size mismatch");
    if (layer.opposite_spin.size() != static_cast<std::size_t>(n_spatial))
      throw std::invalid_argument("opposite-spin coupling container size mismatch");
  }
}

Circuit lucj(int n_elec, int n_spatial, const LucjParameters& params, Layout layout) {
  if (params.n_spatial != n_spatial)
    throw std::invalid_argument("parameter set sized for a different orbital count");
  params.validate();

  Circuit c = reference_prep(n_elec, n_spatial, QubitOrdering::spin_sectored,
                             Encoding::jordan_wigner);
  const auto sweep = givens_sweep_pairs(n_spatial);
  const int sector_offset[2] = {0, n_spatial};

  for (const auto& layer : params.layers) {
    for (int sector = 0; sector < 2; ++sector) {
      const auto& angles = layer.givens[static_cast<std::size_t>(sector)];
      for (std::size_t i = 0; i < sweep.size(); ++i)
        append_givens(c, sector_offset[sector] + sweep[i].first, angles[i]);
    }

    for (int sector = 0; sector < 2; ++sector) {
      const auto& angles = layer.same_spin[static_cast<std::size_t>(sector)];
      std::size_t idx = 0;
      for (int p = 0; p < n_spatial; ++p)
        for (int q = p + 1; q < n_spatial; ++q, ++idx)
          c.rzz(sector_offset[sector] + p, sector_offset[sector] + q, angles[idx]);
    }
    for (int p = 0; p < n_spatial; ++p) {
      if (layout == Layout::heavy_hex && p % 2 != 0) continue;
      c.cp(p, p + n_spatial, layer.opposite_spin[static_cast<std::size_t>(p)]);
    }

    for (int sector = 1; sector >= 0; --sector) {
      const auto& angles = layer.givens[static_cast<std::size_t>(sector)];
      for (std::size_t i = sweep.size(); i-- > 0;)
        append_givens(c, sector_offset[sector] + sweep[i].first, -angles[i]);
    }
  }
  return c;
}

const std::vector<AnsatzInfo>& ansatz_catalog() {
  static const std::vector<AnsatzInfo> catalog = [] {
    std::vector<AnsatzInfo> entries;
    const std::vector<Encoding> both = {Encoding::jordan_wigner, Encoding::bravyi_kitaev};
    entries.push_back({"uccsd", false, both, {QubitOrdering::spatial_blocked},
                       [](int ne, int ns) {
                         return uccsd(ne, ns, AmplitudeSet{}, Encoding::jordan_wigner);
                       }});
    entries.push_back({"upccd", false, both, {QubitOrdering::spatial_blocked},
                       [](int ne, int ns) {
                         return upccd(ne, ns, AmplitudeSet{}, Encoding::jordan_wigner);
                       }});
    entries.push_back({"upccgsd", false, both, {QubitOrdering::spatial_blocked},
                       [](int ne, int ns) {
                         return upccgsd(ne, ns, AmplitudeSet{}, Encoding::jordan_wigner);
                       }});
    entries.push_back({"lucj", true, {}, {QubitOrdering::spin_sectored},
                       [](int ne, int ns) {
                         return lucj(ne, ns, LucjParameters::zeros(ns, 1), Layout::all_to_all);
                       }});
    return entries;
  }();
  return catalog;
}

}  // namespace qcut
