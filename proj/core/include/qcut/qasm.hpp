// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "qcut/circuit.hpp"
#include "qcut/pauli.hpp"

namespace qcut {

/// Positioned parse failure; line and column are 1-based into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::string token);

  int line;
  int column;
  std::string message;
  std::string token;
};

struct ParseOptions {
  /// Receives warnings for ignored constructs (creg, measure).
  std::function<void(const std::string&)> warn;
};

/// Parses the supported OpenQASM 2 subset: one or more qregs (concatenated in
/// declaration order), gates {x,h,s,sdg,rx,ry,rz,p,u1,cx,cz,cp,cu1,rzz},
/// barrier/comments ignored, creg and measure ignored with a warning. Angle
/// expressions allow literals, pi, + - * /, unary minus and parentheses.
Circuit parse_qasm(const std::string& text, const ParseOptions& opts = {});

/// Emits the circuit as OpenQASM 2; angles printed with 17 significant
/// digits so the output re-parses to an identical gate list.
std::string emit_qasm(const Circuit& c);

/// Parses a textual Pauli sum such as "0.5*Z0 Z1 - 0.25*X0" over n_qubits.
/// Errors (including out-of-range qubits) carry source positions.
PauliSum parse_pauli_text(const std::string& text, int n_qubits);

}  // namespace qcut
