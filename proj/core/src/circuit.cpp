// SPDX-License-Identifier: Apache-2.0
#include "qcut/circuit.hpp"

#include <stdexcept>

namespace qcut {

bool is_two_qubit(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CP:
    case GateKind::RZZ:
      return true;
    default:
      return false;
  }
}

bool has_angle(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::CP:
    case GateKind::RZZ:
      return true;
    default:
      return false;
  }
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::Phase: return "p";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CP: return "cp";
    case GateKind::RZZ: return "rzz";
  }
  return "?";
}

void Circuit::add(GateKind kind, int q0, int q1, double angle) {
  if (q0 < 0 || q0 >= n_qubits) throw std::out_of_range("gate operand out of range");
  if (is_two_qubit(kind)) {
    if (q1 < 0 || q1 >= n_qubits) throw std::out_of_range("gate operand out of range");
    if (q0 == q1) throw std::invalid_argument("two-qubit gate operands must be distinct");
  } else {
    q1 = -1;
  }
  if (!has_angle(kind)) angle = 0.0;
  gates.push_back({kind, q0, q1, angle});
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits)
    throw std::invalid_argument("appending circuits over different register sizes");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::map<GateKind, std::size_t> gate_census(const Circuit& c) {
  std::map<GateKind, std::size_t> counts;
  for (const auto& g : c.gates) ++counts[g.kind];
  return counts;
}

Circuit decompose_cx_via_cz(const Circuit& c) {
  Circuit out(c.n_qubits);
  for (const auto& g : c.gates) {
    if (g.kind != GateKind::CX) {
      out.gates.push_back(g);
      continue;
    }
    out.h(g.q1);
    out.cz(g.q0, g.q1);
    out.h(g.q1);
  }
  return out;
}

}  // namespace qcut
