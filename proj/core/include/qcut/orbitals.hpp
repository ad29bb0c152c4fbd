// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcut {

enum class Spin : std::uint8_t { alpha = 0, beta = 1 };

/// How spin-orbitals (spatial, spin) are flattened onto qubit/mode indices.
///
/// spatial_blocked keeps the two spins of one spatial orbital adjacent,
/// (s, sigma) -> 2s + sigma. spin_sectored groups all alpha modes first,
/// (s, sigma) -> s + sigma * n_spatial. Alpha always comes before beta.
enum class QubitOrdering : std::uint8_t { spatial_blocked = 0, spin_sectored = 1 };

struct SpinOrbitalIndex {
  int spatial = 0;
  Spin spin = Spin::alpha;

  friend bool operator==(const SpinOrbitalIndex&, const SpinOrbitalIndex&) = default;
};

/// Flattened mode index of a spin-orbital under the given ordering.
inline int mode_index(SpinOrbitalIndex so, QubitOrdering ordering, int n_spatial) {
  if (so.spatial < 0 || so.spatial >= n_spatial)
    throw std::out_of_range("spatial orbital index out of range");
  const int sigma = static_cast<int>(so.spin);
  return ordering == QubitOrdering::spatial_blocked ? 2 * so.spatial + sigma
                                                    : so.spatial + sigma * n_spatial;
}

/// Inverse of mode_index.
inline SpinOrbitalIndex spin_orbital_of_mode(int mode, QubitOrdering ordering, int n_spatial) {
  if (mode < 0 || mode >= 2 * n_spatial) throw std::out_of_range("mode index out of range");
  if (ordering == QubitOrdering::spatial_blocked)
    return {mode / 2, static_cast<Spin>(mode % 2)};
  return {mode % n_spatial, static_cast<Spin>(mode / n_spatial)};
}

/// Occupation-number vector over M spin-orbital modes; bits[m] in {0,1}.
struct OccupationVector {
  std::vector<std::uint8_t> bits;

  OccupationVector() = default;
  explicit OccupationVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  int size() const { return static_cast<int>(bits.size()); }

  int popcount() const {
    int n = 0;
    for (auto b : bits) n += b ? 1 : 0;
    return n;
  }

  /// Basis index with mode 0 as the least-significant bit.
  std::uint64_t basis_index() const {
    std::uint64_t idx = 0;
    for (int m = 0; m < size(); ++m)
      if (bits[static_cast<std::size_t>(m)]) idx |= std::uint64_t{1} << m;
    return idx;
  }
};

/// Closed-shell reference occupation: the lowest n_elec/2 spatial orbitals
/// doubly occupied, flattened under the given ordering.
OccupationVector reference_occupation(int n_elec, int n_spatial, QubitOrdering ordering);

}  // namespace qcut
