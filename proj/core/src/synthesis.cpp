// SPDX-License-Identifier: Apache-2.0
#include "qcut/synthesis.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qcut {

std::vector<Gate> pauli_rotation(const PauliString& p, double theta) {
  if (p.axes.empty()) throw std::invalid_argument("cannot synthesize a rotation of the identity");
  constexpr double half_pi = std::numbers::pi / 2.0;

  std::vector<Gate> gates;
  std::vector<int> involved;
  involved.reserve(p.axes.size());

  for (const auto& [q, axis] : p.axes) {
    involved.push_back(q);
    if (axis == PauliAxis::X)
      gates.push_back({GateKind::H, q, -1, 0.0});
    else if (axis == PauliAxis::Y)
      gates.push_back({GateKind::RX, q, -1, half_pi});
  }

  for (std::size_t i = 0; i + 1 < involved.size(); ++i)
    gates.push_back({GateKind::CX, involved[i], involved[i + 1], 0.0});
  gates.push_back({GateKind::RZ, involved.back(), -1, theta});
  for (std::size_t i = involved.size() - 1; i-- > 0;)
    gates.push_back({GateKind::CX, involved[i], involved[i + 1], 0.0});

  for (auto it = p.axes.rbegin(); it != p.axes.rend(); ++it) {
    if (it->second == PauliAxis::X)
      gates.push_back({GateKind::H, it->first, -1, 0.0});
    else if (it->second == PauliAxis::Y)
      gates.push_back({GateKind::RX, it->first, -1, -half_pi});
  }
  return gates;
}

void append_pauli_rotation(Circuit& c, const PauliString& p, double theta) {
  for (const auto& g : pauli_rotation(p, theta)) c.add(g.kind, g.q0, g.q1, g.angle);
}

Circuit trotter_circuit(const PauliSum& g, int reps) {
  if (reps < 1) throw std::invalid_argument("repetition count must be positive");
  // Merge duplicate strings into the deterministic order but keep
  // zero-coefficient terms: a zero-initialized generator still compiles to
  // its structural RZ(0) rotations.
  std::map<std::map<int, PauliAxis>, Complex> merged;
  for (const auto& t : g.terms) merged[t.axes] += t.coefficient;
  for (const auto& [axes, coeff] : merged) {
    if (std::abs(coeff.real()) > 1e-12)
      throw std::invalid_argument(
          "generator term has a non-imaginary coefficient; exp(G) requires iG Hermitian");
  }

  Circuit c(g.n_qubits);
  for (int r = 0; r < reps; ++r) {
    for (const auto& [axes, coeff] : merged) {
      if (axes.empty()) continue;  // global phase
      // exp(i y P) = exp(-i (-2y)/2 P)
      append_pauli_rotation(c, PauliString{{1.0, 0.0}, axes}, -2.0 * coeff.imag());
    }
  }
  return c;
}

}  // namespace qcut
