// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qcut/orbitals.hpp"

namespace qcut {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are treated as zero when sums are
/// simplified.
inline constexpr double kCoefficientZeroTol = 1e-14;

enum class LadderKind : std::uint8_t { create = 0, annihilate = 1 };

struct LadderOp {
  int mode = 0;
  LadderKind kind = LadderKind::create;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp creation(int mode) { return {mode, LadderKind::create}; }
inline LadderOp annihilation(int mode) { return {mode, LadderKind::annihilate}; }

/// One product of ladder operators with a complex coefficient. The operator
/// order is kept exactly as written; no normal ordering is applied anywhere.
struct FermionTerm {
  Complex coefficient{0.0, 0.0};
  std::vector<LadderOp> ops;

  /// Hermitian adjoint: reversed op order, create<->annihilate swapped,
  /// conjugated coefficient.
  FermionTerm adjoint() const;

  int max_mode() const;
};

/// Sum of FermionTerms. Construction appends; call simplify() to merge.
struct FermionSum {
  std::vector<FermionTerm> terms;

  FermionSum() = default;
  explicit FermionSum(std::vector<FermionTerm> t) : terms(std::move(t)) {}

  FermionSum& operator+=(const FermionTerm& t) {
    terms.push_back(t);
    return *this;
  }
  FermionSum& operator+=(const FermionSum& other);

  bool empty() const { return terms.empty(); }
  int max_mode() const;
};

/// Merge like terms (identical op sequences), drop coefficients below
/// kCoefficientZeroTol, and order terms lexicographically by op sequence.
/// Idempotent and insensitive to input term order.
FermionSum simplify(const FermionSum& f);

/// T - T^dagger.
FermionSum anti_hermitian(const FermionSum& t);

/// Cluster amplitudes. singles/doubles/pair_doubles are keyed by spatial
/// orbital indices; generalized_* are keyed by flattened spin-orbital modes
/// and feed the generalized cluster operator. Missing keys read as zero.
struct AmplitudeSet {
  std::map<std::pair<int, int>, double> singles;        // (I, A) spatial
  std::map<std::array<int, 4>, double> doubles;         // (I, J, A, B) spatial
  std::map<std::pair<int, int>, double> pair_doubles;   // (I, A) spatial
  std::map<std::pair<int, int>, double> generalized_singles;   // (p, q) modes
  std::map<std::array<int, 4>, double> generalized_doubles;    // (p, q, r, s) modes

  double single(int i, int a) const;
  double double_amp(int i, int j, int a, int b) const;
  double pair_double(int i, int a) const;
  double generalized_single(int p, int q) const;
  double generalized_double(int p, int q, int r, int s) const;
};

/// Second-quantized molecular Hamiltonian from spatial-orbital integrals:
///   sum_PQ h[P][Q] a+_P a_Q  +  1/2 sum_PQRS g[P][Q][R][S] a+_P a+_R a_S a_Q
///   + h_nuc,
/// expanded over both spins. h is n_spatial x n_spatial (row-major), g is
/// n_spatial^4 in chemists' index order (PQ|RS), flattened row-major.
FermionSum build_hamiltonian(const std::vector<double>& h,
                             const std::vector<double>& g,
                             double h_nuc,
                             int n_spatial,
                             QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// Singles + doubles excitation operator over occupied -> virtual
/// spin-orbital excitations that preserve S_z.
FermionSum make_singles_doubles(const AmplitudeSet& amps, int n_elec, int n_spatial,
                                QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// Pair-double operator: one a+_{Aa} a+_{Ab} a_{Ib} a_{Ia} term per
/// (occupied I, virtual A) spatial pair.
FermionSum make_pair_doubles(const AmplitudeSet& amps, int n_elec, int n_spatial,
                             QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// Generalized cluster operator over all spin-orbital modes:
///   1/2 sum_pq t^q_p a+_q a_p + 1/4 sum_pqrs t^rs_pq a+_r a+_s a_q a_p.
FermionSum make_generalized_cluster(const AmplitudeSet& amps, int n_spatial,
                                    QubitOrdering ordering = QubitOrdering::spatial_blocked);

/// One excitation of an ansatz generator: a unit-coefficient ladder product
/// plus the real amplitude that scales it. Builders compile each excitation's
/// anti-Hermitian generator separately so that zero amplitudes still produce
/// the (zero-angle) structural gates.
struct Excitation {
  std::vector<LadderOp> ops;
  double amplitude = 0.0;
};

std::vector<Excitation> singles_doubles_excitations(const AmplitudeSet& amps, int n_elec,
                                                    int n_spatial, QubitOrdering ordering);
std::vector<Excitation> pair_double_excitations(const AmplitudeSet& amps, int n_elec,
                                                int n_spatial, QubitOrdering ordering);
/// Spin-preserving generalized singles over all spatial pairs p < q.
std::vector<Excitation> generalized_single_excitations(const AmplitudeSet& amps, int n_spatial,
                                                       QubitOrdering ordering);

}  // namespace qcut
