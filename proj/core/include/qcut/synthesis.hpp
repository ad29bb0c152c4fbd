// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcut/circuit.hpp"
#include "qcut/pauli.hpp"

namespace qcut {

/// Gates implementing exp(-i theta/2 P): a basis-change layer (H for X,
/// RX(pi/2) for Y), a CX ladder onto the highest involved qubit, RZ(theta)
/// there, then the exact inverse. Throws for an identity (empty) string.
std::vector<Gate> pauli_rotation(const PauliString& p, double theta);

/// Appends pauli_rotation gates to an existing circuit.
void append_pauli_rotation(Circuit& c, const PauliString& p, double theta);

/// First-order product circuit for exp(G), where G is anti-Hermitian so each
/// term coefficient is purely imaginary (checked to 1e-12). Terms are applied
/// in simplified (lexicographic) order, repeated `reps` times. Identity terms
/// contribute only a global phase and are skipped.
Circuit trotter_circuit(const PauliSum& g, int reps = 1);

}  // namespace qcut
