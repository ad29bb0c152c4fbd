// SPDX-License-Identifier: Apache-2.0
#include "qcut/simulator.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcut {

namespace {
std::atomic<int> g_high_water{0};
}

int simulation_high_water_mark() { return g_high_water.load(); }
void reset_simulation_high_water_mark() { g_high_water.store(0); }

Statevector::Statevector(int n_qubits, std::uint64_t basis_index) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kSimulationQubitCap)
    throw std::invalid_argument("qubit count exceeds simulation cap");
  int seen = g_high_water.load();
  while (seen < n_ && !g_high_water.compare_exchange_weak(seen, n_)) {
  }
  amps_.assign(std::uint64_t{1} << n_, Complex{0.0, 0.0});
  if (basis_index >= dim()) throw std::out_of_range("initial basis index out of range");
  amps_[basis_index] = Complex{1.0, 0.0};
}

void Statevector::apply_single(int q, Complex u00, Complex u01, Complex u10, Complex u11) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < dim(); ++i) {
    if (i & mask) continue;
    const std::uint64_t j = i | mask;
    const Complex a0 = amps_[i], a1 = amps_[j];
    amps_[i] = u00 * a0 + u01 * a1;
    amps_[j] = u10 * a0 + u11 * a1;
  }
}

void Statevector::apply(const Gate& g) {
  using namespace std::complex_literals;
  const double half = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::X:
      apply_single(g.q0, 0.0, 1.0, 1.0, 0.0);
      return;
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      apply_single(g.q0, s, s, s, -s);
      return;
    }
    case GateKind::S:
      apply_single(g.q0, 1.0, 0.0, 0.0, 1.0i);
      return;
    case GateKind::Sdg:
      apply_single(g.q0, 1.0, 0.0, 0.0, -1.0i);
      return;
    case GateKind::RX:
      apply_single(g.q0, std::cos(half), -1.0i * std::sin(half), -1.0i * std::sin(half),
                   std::cos(half));
      return;
    case GateKind::RY:
      apply_single(g.q0, std::cos(half), -std::sin(half), std::sin(half), std::cos(half));
      return;
    case GateKind::RZ:
      apply_single(g.q0, std::exp(-1.0i * half), 0.0, 0.0, std::exp(1.0i * half));
      return;
    case GateKind::Phase:
      apply_single(g.q0, 1.0, 0.0, 0.0, std::exp(1.0i * g.angle));
      return;
    case GateKind::CX: {
      const std::uint64_t cmask = std::uint64_t{1} << g.q0;
      const std::uint64_t tmask = std::uint64_t{1} << g.q1;
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
      return;
    }
    case GateKind::CZ: {
      const std::uint64_t mask = (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & mask) == mask) amps_[i] = -amps_[i];
      return;
    }
    case GateKind::CP: {
      const std::uint64_t mask = (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
      const Complex phase = std::exp(1.0i * g.angle);
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & mask) == mask) amps_[i] *= phase;
      return;
    }
    case GateKind::RZZ: {
      const std::uint64_t m0 = std::uint64_t{1} << g.q0;
      const std::uint64_t m1 = std::uint64_t{1} << g.q1;
      const Complex even = std::exp(-1.0i * half), odd = std::exp(1.0i * half);
      for (std::uint64_t i = 0; i < dim(); ++i) {
        const bool parity = static_cast<bool>(i & m0) != static_cast<bool>(i & m1);
        amps_[i] *= parity ? odd : even;
      }
      return;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

void Statevector::apply(const Circuit& c) {
  if (c.n_qubits != n_) throw std::invalid_argument("circuit register size mismatch");
  for (const auto& g : c.gates) apply(g);
}

double Statevector::norm_squared() const {
  double n2 = 0.0;
  for (const auto& a : amps_) n2 += std::norm(a);
  return n2;
}

void Statevector::scale(Complex factor) {
  for (auto& a : amps_) a *= factor;
}

double Statevector::bit_probability(int q, int bit) const {
  const std::uint64_t mask = std::uint64_t{1} << q;
  double p = 0.0;
  for (std::uint64_t i = 0; i < dim(); ++i)
    if (static_cast<int>((i & mask) != 0) == bit) p += std::norm(amps_[i]);
  return p;
}

void Statevector::project_bit(int q, int bit) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < dim(); ++i)
    if (static_cast<int>((i & mask) != 0) != bit) amps_[i] = Complex{0.0, 0.0};
}

Statevector simulate(const Circuit& c, std::uint64_t initial_basis) {
  Statevector psi(c.n_qubits, initial_basis);
  psi.apply(c);
  return psi;
}

Complex pauli_expectation_term(const Statevector& psi, const PauliString& p) {
  std::uint64_t flip = 0, phase_mask = 0;
  int n_y = 0;
  for (const auto& [q, axis] : p.axes) {
    if (q >= psi.n_qubits()) throw std::out_of_range("observable qubit out of range");
    const std::uint64_t mask = std::uint64_t{1} << q;
    switch (axis) {
      case PauliAxis::X:
        flip |= mask;
        break;
      case PauliAxis::Y:
        flip |= mask;
        phase_mask |= mask;
        ++n_y;
        break;
      case PauliAxis::Z:
        phase_mask |= mask;
        break;
    }
  }
  // i^{n_y} overall, (-1) per set bit of b & phase_mask.
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex ipow = kIPow[n_y % 4];

  Complex acc{0.0, 0.0};
  const auto& amps = psi.amplitudes();
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const Complex a = amps[b];
    if (a == Complex{0.0, 0.0}) continue;
    const double sign = std::popcount(b & phase_mask) % 2 == 0 ? 1.0 : -1.0;
    acc += std::conj(amps[b ^ flip]) * (ipow * sign) * a;
  }
  return p.coefficient * acc;
}

double expectation(const Statevector& psi, const PauliSum& o) {
  if (o.max_imag_coefficient() > 1e-10)
    throw std::invalid_argument("observable must be Hermitian (real coefficients)");
  Complex acc{0.0, 0.0};
  for (const auto& t : o.terms) acc += pauli_expectation_term(psi, t);
  return acc.real();
}

}  // namespace qcut
