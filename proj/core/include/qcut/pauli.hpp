// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcut {

using Complex = std::complex<double>;

enum class PauliAxis : std::uint8_t { X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis with a complex coefficient.
/// Identity factors are not stored; an empty axes map is the identity string.
struct PauliString {
  Complex coefficient{1.0, 0.0};
  std::map<int, PauliAxis> axes;

  int weight() const { return static_cast<int>(axes.size()); }
  int max_qubit() const { return axes.empty() ? -1 : axes.rbegin()->first; }

  /// Operator product; phases from same-qubit axis composition fold into the
  /// coefficient (e.g. X*Y = iZ).
  PauliString operator*(const PauliString& rhs) const;

  std::string to_string() const;
};

/// Sum of PauliStrings over a fixed qubit count.
struct PauliSum {
  std::vector<PauliString> terms;
  int n_qubits = 0;

  PauliSum() = default;
  explicit PauliSum(int n) : n_qubits(n) {}

  PauliSum& operator+=(const PauliString& t) {
    terms.push_back(t);
    return *this;
  }
  PauliSum& operator+=(const PauliSum& other);
  PauliSum operator*(const PauliSum& rhs) const;

  bool empty() const { return terms.empty(); }

  /// Largest |imag(coefficient)| over all terms; zero for Hermitian sums.
  double max_imag_coefficient() const;

  std::string to_string() const;
};

/// Merge terms with identical axes maps, drop |c| < 1e-14, and order terms
/// lexicographically by axes map. Idempotent.
PauliSum pauli_simplify(const PauliSum& p);

}  // namespace qcut
