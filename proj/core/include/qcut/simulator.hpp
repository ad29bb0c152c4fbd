// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/pauli.hpp"

namespace qcut {

/// Largest register the dense simulator accepts.
inline constexpr int kSimulationQubitCap = 24;

/// Dense state over 2^n amplitudes; qubit 0 is the least-significant bit of
/// the amplitude index.
class Statevector {
 public:
  explicit Statevector(int n_qubits, std::uint64_t basis_index = 0);

  int n_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  Complex amplitude(std::uint64_t idx) const { return amps_[idx]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }

  void apply(const Gate& g);
  void apply(const Circuit& c);

  double norm_squared() const;
  void scale(Complex factor);

  /// Probability that qubit q reads `bit`.
  double bit_probability(int q, int bit) const;
  /// Zeroes all amplitudes where qubit q != bit (no renormalization).
  void project_bit(int q, int bit);

 private:
  void apply_single(int q, Complex u00, Complex u01, Complex u10, Complex u11);

  int n_ = 0;
  std::vector<Complex> amps_;
};

/// Exact state after applying the circuit to the given basis state.
Statevector simulate(const Circuit& c, std::uint64_t initial_basis = 0);

/// <psi|O|psi> for a Hermitian PauliSum (throws if any |imag coeff| > 1e-10).
double expectation(const Statevector& psi, const PauliSum& o);

/// <psi|P|psi> for one Pauli string (coefficient included), as a complex
/// bilinear form; no Hermiticity requirement.
Complex pauli_expectation_term(const Statevector& psi, const PauliString& p);

/// High-water mark of register sizes passed through simulate(); used by tests
/// to assert that cut workflows never materialize the joint register.
int simulation_high_water_mark();
void reset_simulation_high_water_mark();

}  // namespace qcut
