// SPDX-License-Identifier: Apache-2.0
#include "qcut/cutting.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcut {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDropTol = 1e-15;
}  // namespace

Partition::Partition(std::vector<int> blocks) : block_of(std::move(blocks)) {
  if (block_of.empty()) throw std::invalid_argument("partition must cover at least one qubit");
  int count[2] = {0, 0};
  for (int b : block_of) {
    if (b != 0 && b != 1) throw std::invalid_argument("partition blocks must be 0 or 1");
    ++count[b];
  }
  if (count[0] == 0 || count[1] == 0)
    throw std::invalid_argument("both partition blocks must be nonempty");
}

std::vector<int> Partition::qubits_in_block(int b) const {
  std::vector<int> out;
  for (int q = 0; q < n_qubits(); ++q)
    if (block_of[static_cast<std::size_t>(q)] == b) out.push_back(q);
  return out;
}

Partition Partition::parse(const std::string& text, int n_qubits) {
  std::vector<int> block_of(static_cast<std::size_t>(n_qubits), -1);
  std::istringstream blocks(text);
  std::string block_text;
  int block = 0;
  while (std::getline(blocks, block_text, ';')) {
    if (block > 1) throw std::invalid_argument("only bipartitions are supported");
    std::istringstream qubits(block_text);
    std::string qubit_text;
    while (std::getline(qubits, qubit_text, ',')) {
      std::size_t pos = 0;
      int q = -1;
      try {
        q = std::stoi(qubit_text, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid qubit index in partition spec: " + qubit_text);
      }
      while (pos < qubit_text.size() && std::isspace(static_cast<unsigned char>(qubit_text[pos])))
        ++pos;
      if (pos != qubit_text.size())
        throw std::invalid_argument("invalid qubit index in partition spec: " + qubit_text);
      if (q < 0 || q >= n_qubits)
        throw std::invalid_argument("partition qubit index out of range: " + qubit_text);
      if (block_of[static_cast<std::size_t>(q)] != -1)
        throw std::invalid_argument("qubit listed twice in partition spec");
      block_of[static_cast<std::size_t>(q)] = block;
    }
    ++block;
  }
  for (int q = 0; q < n_qubits; ++q)
    if (block_of[static_cast<std::size_t>(q)] == -1)
      throw std::invalid_argument("partition spec does not cover qubit " + std::to_string(q));
  return Partition(std::move(block_of));
}

std::vector<CutGate> find_cuts(const Circuit& c, const Partition& p) {
  if (p.n_qubits() != c.n_qubits)
    throw std::invalid_argument("partition size does not match circuit register");
  std::vector<CutGate> cuts;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (!is_two_qubit(g.kind)) continue;
    if (p.block(g.q0) == p.block(g.q1)) continue;
    CutGate cut{i, g.kind, std::nullopt};
    if (has_angle(g.kind)) cut.angle = g.angle;
    cuts.push_back(cut);
  }
  return cuts;
}

double gate_gamma_squared(GateKind kind, double angle) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
      return 9.0;
    case GateKind::CP: {
      const double g = 1.0 + 2.0 * std::abs(std::sin(angle / 2.0));
      return g * g;
    }
    case GateKind::RZZ: {
      const double g = 1.0 + 2.0 * std::abs(std::sin(angle));
      return g * g;
    }
    default:
      throw std::invalid_argument("sampling overhead is defined for two-qubit gates only");
  }
}

bool OverheadReport::saturated() const { return std::isinf(total_gamma_squared); }

OverheadReport total_overhead(const std::vector<CutGate>& cuts) {
  OverheadReport report;
  for (const auto& cut : cuts) {
    const double g2 = gate_gamma_squared(cut.kind, cut.angle.value_or(0.0));
    ++report.counts[cut.kind];
    report.per_gate_gamma_squared.push_back(g2);
    report.total_gamma_squared *= g2;  // IEEE overflow saturates to +inf
    report.log10_total += std::log10(g2);
  }
  return report;
}

QPDDecomposition decompose_zz(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  const double cs = c * s;

  QPDDecomposition d;
  auto add = [&](double a, LocalOp op0, LocalOp op1) {
    if (std::abs(a) < kDropTol) return;
    d.terms.push_back({a, op0, op1});
  };
  add(c * c, LocalOp::identity, LocalOp::identity);
  add(s * s, LocalOp::z_conjugation, LocalOp::z_conjugation);
  add(cs, LocalOp::signed_z_measure, LocalOp::s_plus);
  add(-cs, LocalOp::signed_z_measure, LocalOp::s_minus);
  add(cs, LocalOp::s_plus, LocalOp::signed_z_measure);
  add(-cs, LocalOp::s_minus, LocalOp::signed_z_measure);

  d.kappa = 0.0;
  for (const auto& t : d.terms) d.kappa += std::abs(t.coefficient);
  return d;
}

GateDecomposition decompose_gate(GateKind kind, double angle) {
  GateDecomposition out;
  switch (kind) {
    case GateKind::CX:
      out.zz_angle = kPi / 4.0;
      out.corrections[0].post.push_back({GateKind::RZ, 0, -1, kPi / 2.0});
      out.corrections[1].pre.push_back({GateKind::H, 0, -1, 0.0});
      out.corrections[1].post.push_back({GateKind::RZ, 0, -1, kPi / 2.0});
      out.corrections[1].post.push_back({GateKind::H, 0, -1, 0.0});
      break;
    case GateKind::CZ:
      out.zz_angle = kPi / 4.0;
      out.corrections[0].post.push_back({GateKind::RZ, 0, -1, kPi / 2.0});
      out.corrections[1].post.push_back({GateKind::RZ, 0, -1, kPi / 2.0});
      break;
    case GateKind::CP:
      out.zz_angle = angle / 4.0;
      out.corrections[0].post.push_back({GateKind::RZ, 0, -1, angle / 2.0});
      out.corrections[1].post.push_back({GateKind::RZ, 0, -1, angle / 2.0});
      break;
    case GateKind::RZZ:
      out.zz_angle = -angle / 2.0;
      break;
    default:
      throw std::invalid_argument("unsupported gate kind for quasiprobability decomposition");
  }
  out.qpd = decompose_zz(out.zz_angle);
  return out;
}

GateDecomposition decompose_gate(const CutGate& g) {
  return decompose_gate(g.kind, g.angle.value_or(0.0));
}

namespace {

void append_local_op(RealizedBlock& block, LocalOp op, int local_qubit,
                     const SideCorrection& correction) {
  for (Gate g : correction.pre) {
    g.q0 = local_qubit;
    block.circuit.add(g.kind, g.q0, g.q1, g.angle);
  }
  switch (op) {
    case LocalOp::identity:
      break;
    case LocalOp::z_conjugation:
      block.circuit.phase(local_qubit, kPi);
      break;
    case LocalOp::s_plus:
      // exp(+i pi Z/4) = Sdg up to a global phase
      block.circuit.sdg(local_qubit);
      break;
    case LocalOp::s_minus:
      block.circuit.s(local_qubit);
      break;
    case LocalOp::signed_z_measure:
      block.markers.push_back({local_qubit, block.circuit.size()});
      break;
  }
  for (Gate g : correction.post) {
    g.q0 = local_qubit;
    block.circuit.add(g.kind, g.q0, g.q1, g.angle);
  }
}

}  // namespace

Realization realize_assignment(const Circuit& c, const Partition& p,
                               const std::vector<std::size_t>& choice) {
  const auto cuts = find_cuts(c, p);
  if (choice.size() != cuts.size())
    throw std::invalid_argument("term choice must cover every cut");

  Realization real;
  std::vector<int> local_index(static_cast<std::size_t>(c.n_qubits), -1);
  for (int b = 0; b < 2; ++b) {
    auto& block = real.blocks[static_cast<std::size_t>(b)];
    block.qubit_map = p.qubits_in_block(b);
    block.circuit = Circuit(static_cast<int>(block.qubit_map.size()));
    for (std::size_t i = 0; i < block.qubit_map.size(); ++i)
      local_index[static_cast<std::size_t>(block.qubit_map[i])] = static_cast<int>(i);
  }

  std::size_t next_cut = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const int b0 = p.block(g.q0);
    if (!is_two_qubit(g.kind) || p.block(g.q1) == b0) {
      auto& block = real.blocks[static_cast<std::size_t>(b0)];
      const int lq0 = local_index[static_cast<std::size_t>(g.q0)];
      const int lq1 = is_two_qubit(g.kind) ? local_index[static_cast<std::size_t>(g.q1)] : -1;
      block.circuit.add(g.kind, lq0, lq1, g.angle);
      continue;
    }

    const auto decomp = decompose_gate(cuts[next_cut]);
    const std::size_t term_index = choice[next_cut];
    if (term_index >= decomp.qpd.terms.size())
      throw std::invalid_argument("term choice index out of range");
    const QPDTerm& term = decomp.qpd.terms[term_index];

    append_local_op(real.blocks[static_cast<std::size_t>(b0)], term.op_block0,
                    local_index[static_cast<std::size_t>(g.q0)], decomp.corrections[0]);
    append_local_op(real.blocks[static_cast<std::size_t>(p.block(g.q1))], term.op_block1,
                    local_index[static_cast<std::size_t>(g.q1)], decomp.corrections[1]);

    real.weight *= term.coefficient;
    real.kappa_total *= decomp.qpd.kappa;
    ++next_cut;
  }
  return real;
}

}  // namespace qcut
