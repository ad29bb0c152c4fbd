// SPDX-License-Identifier: Apache-2.0
#include "qcut/estimator.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "qcut/simulator.hpp"

namespace qcut {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t shard, std::uint64_t sample) {
  key_ = mix64(mix64(mix64(seed) ^ shard) ^ sample);
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_double(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

namespace {

struct SplitObservable {
  std::vector<double> coefficients;
  // Unit-coefficient block restrictions, re-indexed onto each block register.
  std::array<std::vector<PauliString>, 2> block_terms;
};

SplitObservable split_observable(const PauliSum& o, const Partition& p) {
  if (o.max_imag_coefficient() > 1e-10)
    throw std::invalid_argument("observable must be Hermitian (real coefficients)");

  std::vector<int> local_index(static_cast<std::size_t>(p.n_qubits()), -1);
  for (int b = 0; b < 2; ++b) {
    const auto qubits = p.qubits_in_block(b);
    for (std::size_t i = 0; i < qubits.size(); ++i)
      local_index[static_cast<std::size_t>(qubits[i])] = static_cast<int>(i);
  }

  SplitObservable split;
  for (const auto& term : o.terms) {
    split.coefficients.push_back(term.coefficient.real());
    PauliString parts[2];
    for (const auto& [q, axis] : term.axes) {
      if (q >= p.n_qubits()) throw std::out_of_range("observable qubit outside the register");
      parts[p.block(q)].axes.emplace(local_index[static_cast<std::size_t>(q)], axis);
    }
    split.block_terms[0].push_back(std::move(parts[0]));
    split.block_terms[1].push_back(std::move(parts[1]));
  }
  return split;
}

/// Sum over all signed-measurement branches of sign * <psi|P_i|psi> with
/// unnormalized projected states; equals tr(P_i M(rho)) for the signed
/// measurement channel applied at each marker.
std::vector<double> branch_expectations(const RealizedBlock& block,
                                        const std::vector<PauliString>& terms) {
  const auto n_markers = block.markers.size();
  std::vector<double> acc(terms.size(), 0.0);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_markers); ++mask) {
    Statevector psi(block.circuit.n_qubits);
    double sign = 1.0;
    std::size_t gate_pos = 0;
    for (std::size_t m = 0; m < n_markers; ++m) {
      while (gate_pos < block.markers[m].gate_pos)
        psi.apply(block.circuit.gates[gate_pos++]);
      const int bit = static_cast<int>((mask >> m) & 1);
      psi.project_bit(block.markers[m].qubit, bit);
      if (bit) sign = -sign;
    }
    while (gate_pos < block.circuit.gates.size()) psi.apply(block.circuit.gates[gate_pos++]);

    for (std::size_t i = 0; i < terms.size(); ++i)
      acc[i] += sign * pauli_expectation_term(psi, terms[i]).real();
  }
  return acc;
}

/// Simulates one block with Born-sampled measurement outcomes; returns the
/// accumulated outcome sign and leaves the collapsed state in psi.
double sample_block(const RealizedBlock& block, CounterRng& rng, Statevector& psi) {
  double sign = 1.0;
  std::size_t gate_pos = 0;
  for (const auto& marker : block.markers) {
    while (gate_pos < marker.gate_pos) psi.apply(block.circuit.gates[gate_pos++]);
    const double p0 = psi.bit_probability(marker.qubit, 0);
    const int outcome = rng.next_double() < p0 ? 0 : 1;
    psi.project_bit(marker.qubit, outcome);
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    if (p > 0.0) psi.scale(Complex{1.0 / std::sqrt(p), 0.0});
    if (outcome == 1) sign = -sign;
  }
  while (gate_pos < block.circuit.gates.size()) psi.apply(block.circuit.gates[gate_pos++]);
  return sign;
}

void check_observable(const Circuit& c, const PauliSum& o) {
  if (o.n_qubits != c.n_qubits)
    throw std::invalid_argument("observable qubit count does not match the circuit");
}

}  // namespace

double exact_reconstruction(const Circuit& c, const Partition& p, const PauliSum& o) {
  check_observable(c, o);
  const auto cuts = find_cuts(c, p);
  if (static_cast<int>(cuts.size()) > kExactReconstructionCutCap)
    throw std::invalid_argument("cut count exceeds the exact enumeration guard");

  const SplitObservable split = split_observable(o, p);
  std::vector<GateDecomposition> decomps;
  decomps.reserve(cuts.size());
  for (const auto& cut : cuts) decomps.push_back(decompose_gate(cut));

  std::vector<std::size_t> choice(cuts.size(), 0);
  double total = 0.0;
  while (true) {
    const Realization real = realize_assignment(c, p, choice);
    const auto e0 = branch_expectations(real.blocks[0], split.block_terms[0]);
    const auto e1 = branch_expectations(real.blocks[1], split.block_terms[1]);
    double value = 0.0;
    for (std::size_t i = 0; i < split.coefficients.size(); ++i)
      value += split.coefficients[i] * e0[i] * e1[i];
    total += real.weight * value;

    // Odometer over term assignments.
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < decomps[k].qpd.terms.size()) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }
  return total;
}

ExpectationEstimate mc_estimate(const Circuit& c, const Partition& p, const PauliSum& o,
                                const EstimatorConfig& cfg) {
  check_observable(c, o);
  if (cfg.shots == 0) throw std::invalid_argument("shot count must be positive");
  if (cfg.shards == 0) throw std::invalid_argument("shard count must be positive");

  const auto cuts = find_cuts(c, p);
  const SplitObservable split = split_observable(o, p);

  std::vector<GateDecomposition> decomps;
  decomps.reserve(cuts.size());
  double kappa_total = 1.0;
  for (const auto& cut : cuts) {
    decomps.push_back(decompose_gate(cut));
    kappa_total *= decomps.back().qpd.kappa;
  }

  struct ShardMoments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;
  };

  auto run_shard = [&](unsigned shard, std::uint64_t n_samples) {
    ShardMoments m;
    std::vector<std::size_t> choice(cuts.size(), 0);
    for (std::uint64_t sample = 0; sample < n_samples; ++sample) {
      CounterRng rng(cfg.seed, shard, sample);
      double term_sign = 1.0;
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        const auto& terms = decomps[k].qpd.terms;
        const double u = rng.next_double() * decomps[k].qpd.kappa;
        double cumulative = 0.0;
        std::size_t pick = terms.size() - 1;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          cumulative += std::abs(terms[t].coefficient);
          if (u < cumulative) {
            pick = t;
            break;
          }
        }
        choice[k] = pick;
        if (terms[pick].coefficient < 0.0) term_sign = -term_sign;
      }

      const Realization real = realize_assignment(c, p, choice);
      double sign = term_sign;
      std::array<Statevector, 2> states{
          Statevector(real.blocks[0].circuit.n_qubits),
          Statevector(real.blocks[1].circuit.n_qubits)};
      for (int b = 0; b < 2; ++b)
        sign *= sample_block(real.blocks[static_cast<std::size_t>(b)], rng,
                             states[static_cast<std::size_t>(b)]);

      double obs = 0.0;
      for (std::size_t i = 0; i < split.coefficients.size(); ++i)
        obs += split.coefficients[i] *
               pauli_expectation_term(states[0], split.block_terms[0][i]).real() *
               pauli_expectation_term(states[1], split.block_terms[1][i]).real();

      const double value = kappa_total * sign * obs;
      m.sum += value;
      m.sum_sq += value * value;
      ++m.n;
    }
    return m;
  };

  const std::uint64_t base = cfg.shots / cfg.shards;
  const std::uint64_t rem = cfg.shots % cfg.shards;
  std::vector<std::future<ShardMoments>> futures;
  for (unsigned s = 0; s < cfg.shards; ++s) {
    const std::uint64_t n_samples = base + (s < rem ? 1 : 0);
    futures.push_back(std::async(std::launch::async, run_shard, s, n_samples));
  }

  double sum = 0.0, sum_sq = 0.0;
  std::uint64_t n = 0;
  for (auto& f : futures) {
    const ShardMoments m = f.get();
    sum += m.sum;
    sum_sq += m.sum_sq;
    n += m.n;
  }

  ExpectationEstimate est;
  est.samples = n;
  est.kappa_total = kappa_total;
  est.value = sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(n) * est.value * est.value) /
                          static_cast<double>(n - 1));
    est.stderr_ = std::sqrt(var / static_cast<double>(n));
  }
  return est;
}

double shots_for_parity(double base_shots, const OverheadReport& report) {
  return base_shots * report.total_gamma_squared;
}

double log10_shots_for_parity(double base_shots, const OverheadReport& report) {
  return std::log10(base_shots) + report.log10_total;
}

}  // namespace qcut
