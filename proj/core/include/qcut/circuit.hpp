// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcut {

enum class GateKind : std::uint8_t {
  X,
  H,
  S,
  Sdg,
  RX,
  RY,
  RZ,
  Phase,  // diag(1, e^{i theta})
  CX,
  CZ,
  CP,   // diag(1, 1, 1, e^{i theta})
  RZZ,  // exp(-i theta/2 Z x Z)
};

bool is_two_qubit(GateKind k);
bool has_angle(GateKind k);
const char* gate_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::X;
  std::int32_t q0 = 0;
  std::int32_t q1 = -1;   // second operand for two-qubit kinds
  double angle = 0.0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed qubit register.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  /// Validates operand ranges and operand distinctness for two-qubit kinds.
  void add(GateKind kind, int q0, int q1 = -1, double angle = 0.0);

  void x(int q) { add(GateKind::X, q); }
  void h(int q) { add(GateKind::H, q); }
  void s(int q) { add(GateKind::S, q); }
  void sdg(int q) { add(GateKind::Sdg, q); }
  void rx(int q, double a) { add(GateKind::RX, q, -1, a); }
  void ry(int q, double a) { add(GateKind::RY, q, -1, a); }
  void rz(int q, double a) { add(GateKind::RZ, q, -1, a); }
  void phase(int q, double a) { add(GateKind::Phase, q, -1, a); }
  void cx(int c, int t) { add(GateKind::CX, c, t); }
  void cz(int a, int b) { add(GateKind::CZ, a, b); }
  void cp(int a, int b, double t) { add(GateKind::CP, a, b, t); }
  void rzz(int a, int b, double t) { add(GateKind::RZZ, a, b, t); }

  /// Appends another circuit over the same register size.
  void append(const Circuit& other);

  std::size_t size() const { return gates.size(); }
};

/// Gate counts by kind (angles ignored).
std::map<GateKind, std::size_t> gate_census(const Circuit& c);

/// Rewrites each CX as H(target) CZ H(target); unitary-equivalent.
Circuit decompose_cx_via_cz(const Circuit& c);

}  // namespace qcut
