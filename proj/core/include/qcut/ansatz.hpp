// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/encoding.hpp"
#include "qcut/fermion.hpp"
#include "qcut/orbitals.hpp"

namespace qcut {

enum class Layout : std::uint8_t { all_to_all = 0, heavy_hex = 1 };

/// Angles for one cluster-Jastrow layer. Orbital-rotation (Givens) angles and
/// same-spin couplings hold one entry per spatial pair p < q in lexicographic
/// order, per spin sector; opposite-spin couplings hold one entry per spatial
/// orbital (the (p_alpha, p_beta) diagonal).
struct LucjLayerParameters {
  std::array<std::vector<double>, 2> givens;
  std::array<std::vector<double>, 2> same_spin;
  std::vector<double> opposite_spin;
};

struct LucjParameters {
  int n_spatial = 0;
  std::vector<LucjLayerParameters> layers;

  int n_layers() const { return static_cast<int>(layers.size()); }

  static LucjParameters zeros(int n_spatial, int n_layers);
  /// Every angle container filled with the same value.
  static LucjParameters uniform(int n_spatial, int n_layers, double angle);
  /// All angles drawn i.i.d. from N(0, sigma^2) with a fixed seed.
  static LucjParameters synthetic(int n_spatial, int n_layers, double sigma,
                                  std::uint64_t seed);

  void validate() const;
};

/// X gates preparing the encoded closed-shell reference state. Throws for odd
/// electron counts.
Circuit reference_prep(int n_elec, int n_spatial, QubitOrdering ordering, Encoding enc);

/// UCCSD: reference prep followed by the first-order product of the
/// anti-Hermitian singles+doubles generator, compiled per excitation so that
/// zero amplitudes keep their (zero-angle) gates.
Circuit uccsd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
              QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// UpCCD: same construction over the pair-double generator.
Circuit upccd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
              QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// UpCCGSD: pair doubles plus spin-preserving generalized singles, repeated k
/// times as a product.
Circuit upccgsd(int n_elec, int n_spatial, const AmplitudeSet& amps, Encoding enc,
                QubitOrdering ordering = QubitOrdering::spatial_blocked, int k = 1);

/// Local unitary cluster-Jastrow circuit (Jordan-Wigner, spin-sectored
/// ordering). Each layer applies a triangular Givens network per spin sector,
/// the diagonal coupling gates (RZZ within sectors, CP across sectors on
/// same-orbital pairs; heavy_hex keeps only even orbitals), then the inverse
/// network.
Circuit lucj(int n_elec, int n_spatial, const LucjParameters& params, Layout layout);

/// Adjacent-qubit pair sequence of the triangular Givens sweep on n modes.
std::vector<std::pair<int, int>> givens_sweep_pairs(int n_modes);

struct AnsatzInfo {
  std::string name;
  bool uses_layouts = false;                // lucj: layouts instead of encodings
  std::vector<Encoding> encodings;          // empty when uses_layouts
  std::vector<QubitOrdering> orderings;
  /// Builds the zero-parameter circuit for an H-chain active space.
  std::function<Circuit(int n_elec, int n_spatial)> build_default;
};

/// The four supported builders with their metadata.
const std::vector<AnsatzInfo>& ansatz_catalog();

}  // namespace qcut
