// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcut/circuit.hpp"

namespace qcut {

/// Bipartition of the qubit register; block_of[q] is 0 or 1.
struct Partition {
  std::vector<int> block_of;

  Partition() = default;
  explicit Partition(std::vector<int> blocks);

  int n_qubits() const { return static_cast<int>(block_of.size()); }
  int block(int q) const { return block_of[static_cast<std::size_t>(q)]; }
  std::vector<int> qubits_in_block(int b) const;

  /// Parses "0,1;2,3": semicolon-separated qubit lists per block.
  static Partition parse(const std::string& text, int n_qubits);
};

/// A two-qubit gate whose operands straddle the partition.
struct CutGate {
  std::size_t gate_index = 0;
  GateKind kind = GateKind::CX;
  std::optional<double> angle;
};

/// Cross-partition two-qubit gates, in circuit order.
std::vector<CutGate> find_cuts(const Circuit& c, const Partition& p);

/// Local-operations sampling overhead factor gamma^2 of one cut gate:
/// 9 for CX/CZ, (1 + 2|sin(theta/2)|)^2 for CP(theta),
/// (1 + 2|sin(theta)|)^2 for RZZ(theta). Throws for single-qubit kinds.
double gate_gamma_squared(GateKind kind, double angle = 0.0);

struct OverheadReport {
  std::map<GateKind, std::size_t> counts;
  std::vector<double> per_gate_gamma_squared;
  /// Product of per-gate factors; +inf once the product exceeds the largest
  /// finite double, mirroring saturated-to-infinite reporting.
  double total_gamma_squared = 1.0;
  /// log10 of the product, finite even when the product saturates.
  double log10_total = 0.0;

  bool saturated() const;
};

OverheadReport total_overhead(const std::vector<CutGate>& cuts);

/// Single-qubit channels realizable locally on one side of a cut.
enum class LocalOp : std::uint8_t {
  identity,
  z_conjugation,     // Z . Z
  signed_z_measure,  // projective Z measurement; the +/-1 outcome multiplies
                     // the sample sign
  s_plus,            // conjugation by exp(+i pi Z / 4)  (Sdg up to phase)
  s_minus,           // conjugation by exp(-i pi Z / 4)  (S up to phase)
};

struct QPDTerm {
  double coefficient = 0.0;
  LocalOp op_block0 = LocalOp::identity;
  LocalOp op_block1 = LocalOp::identity;
};

struct QPDDecomposition {
  std::vector<QPDTerm> terms;
  double kappa = 1.0;  // sum of |coefficients|
};

/// Quasiprobability decomposition of the channel of U(phi) = exp(i phi Z x Z)
/// into local channels:
///   cos^2(phi) [I x I] + sin^2(phi) [Z x Z]
///   +- cos(phi) sin(phi) pairing a signed Z measurement on one side with an
///   exp(+-i pi Z/4) conjugation on the other (four cross terms).
/// kappa = 1 + 2|sin(2 phi)|. Terms with zero coefficient are dropped.
QPDDecomposition decompose_zz(double phi);

/// Fixed single-qubit corrections applied around one side's local op.
struct SideCorrection {
  std::vector<Gate> pre;   // qubit index filled in at realization time
  std::vector<Gate> post;
};

struct GateDecomposition {
  QPDDecomposition qpd;
  std::array<SideCorrection, 2> corrections;  // per operand side
  double zz_angle = 0.0;                      // phi of the reduced ZZ form
};

/// Reduces a supported two-qubit gate (CX, CZ, CP, RZZ) to the ZZ
/// decomposition plus per-side correction gates; kappa^2 equals
/// gate_gamma_squared for the gate.
GateDecomposition decompose_gate(GateKind kind, double angle = 0.0);
GateDecomposition decompose_gate(const CutGate& g);

/// Position of a pending signed Z measurement inside a realized subcircuit:
/// the measurement happens after `gate_pos` gates of that block have run.
struct MeasureMarker {
  int qubit = 0;
  std::size_t gate_pos = 0;
};

struct RealizedBlock {
  Circuit circuit;
  std::vector<MeasureMarker> markers;
  std::vector<int> qubit_map;  // block-local index -> original qubit
};

struct Realization {
  std::array<RealizedBlock, 2> blocks;
  double weight = 1.0;       // product of chosen term coefficients
  double kappa_total = 1.0;  // product of per-cut kappas
};

/// Realizes one term assignment: cut gates are replaced by the chosen terms'
/// local ops plus corrections, and each block is re-indexed onto its own
/// dense register. `choice[i]` selects the term for the i-th cut (in
/// find_cuts order) and must cover every cut.
Realization realize_assignment(const Circuit& c, const Partition& p,
                               const std::vector<std::size_t>& choice);

}  // namespace qcut
