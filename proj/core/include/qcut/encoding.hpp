// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qcut/fermion.hpp"
#include "qcut/orbitals.hpp"
#include "qcut/pauli.hpp"

namespace qcut {

enum class Encoding : std::uint8_t { jordan_wigner = 0, bravyi_kitaev = 1 };

/// Jordan-Wigner image of a fermionic operator on n_modes qubits.
/// a+_p maps to 1/2 (X_p - iY_p) with a Z string on all lower modes, so the
/// occupation of mode p is stored directly in qubit p.
PauliSum jordan_wigner(const FermionSum& f, int n_modes);

/// Bravyi-Kitaev image on n_modes qubits, using the Fenwick-tree
/// update/parity/flip-set construction (valid for any n, not just powers of
/// two).
PauliSum bravyi_kitaev(const FermionSum& f, int n_modes);

PauliSum encode(const FermionSum& f, int n_modes, Encoding enc);

/// Computational-basis bitstring preparing the encoded image of an
/// occupation vector: identity for JW, the mod-2 linear subtree map for BK.
std::vector<std::uint8_t> encode_reference(const OccupationVector& occ, Encoding enc);

/// Fenwick tree over n modes; exposes the index sets that define the BK
/// operator images and basis map.
class FenwickTree {
 public:
  explicit FenwickTree(int n_modes);

  int size() const { return n_; }
  std::vector<int> update_set(int j) const;     // ancestors of j
  std::vector<int> children_set(int j) const;   // direct children (flip set)
  std::vector<int> remainder_set(int j) const;  // children (< j) of ancestors
  std::vector<int> parity_set(int j) const;     // flip set + remainder set
  /// All nodes in the subtree rooted at j, including j; qubit j of the BK
  /// register stores the parity of these modes' occupations.
  std::vector<int> subtree(int j) const;

 private:
  int n_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

}  // namespace qcut
