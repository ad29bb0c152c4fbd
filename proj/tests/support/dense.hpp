// SPDX-License-Identifier: Apache-2.0
//
// Dense-matrix oracles for the test suite. Everything here is built from
// first principles (occupation-number matrix elements, explicit gate
// matrices, Taylor expm) and stays independent of the library's sparse
// Pauli/statevector paths it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/cutting.hpp"
#include "qcut/fermion.hpp"
#include "qcut/pauli.hpp"

namespace dense {

using C = std::complex<double>;

struct Mat {
  std::size_t n = 0;
  std::vector<C> a;  // row-major

  Mat() = default;
  explicit Mat(std::size_t dim) : n(dim), a(dim * dim, C{0.0, 0.0}) {}

  C& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

inline Mat identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
  Mat out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const C v = x(i, k);
      if (v == C{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += v * y(k, j);
    }
  return out;
}

inline Mat add(const Mat& x, const Mat& y) {
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline Mat scale(const Mat& x, C factor) {
  Mat out = x;
  for (auto& v : out.a) v *= factor;
  return out;
}

inline Mat dagger(const Mat& x) {
  Mat out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) out(i, j) = std::conj(x(j, i));
  return out;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

inline double one_norm(const Mat& x) {
  double m = 0.0;
  for (std::size_t j = 0; j < x.n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < x.n; ++i) col += std::abs(x(i, j));
    m = std::max(m, col);
  }
  return m;
}

/// Scaling-and-squaring Taylor exponential; adequate for the small operator
/// norms used in tests.
inline Mat expm(const Mat& x) {
  int squarings = 0;
  double norm = one_norm(x);
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  Mat scaled = scale(x, C{1.0 / std::pow(2.0, squarings), 0.0});

  Mat result = identity(x.n);
  Mat term = identity(x.n);
  for (int k = 1; k <= 30; ++k) {
    term = mul(term, scaled);
    term = scale(term, C{1.0 / k, 0.0});
    result = add(result, term);
  }
  for (int s = 0; s < squarings; ++s) result = mul(result, result);
  return result;
}

/// Matrix of one ladder operator in the occupation basis (mode 0 is the
/// least-significant bit): <k'|a+_p|k> = delta_{k', k + e_p} (1 - k_p)
/// (-1)^{sum_{q<p} k_q}, and the adjoint for annihilation.
inline Mat ladder_matrix(int n_modes, int mode, bool creation) {
  const std::size_t dim = std::size_t{1} << n_modes;
  const std::uint64_t mask = std::uint64_t{1} << mode;
  Mat m(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const bool occupied = (k & mask) != 0;
    if (creation == occupied) continue;
    const std::uint64_t lower = k & (mask - 1);
    const double sign = std::popcount(lower) % 2 == 0 ? 1.0 : -1.0;
    const std::uint64_t kp = creation ? (k | mask) : (k & ~mask);
    m(kp, k) = sign;
  }
  return m;
}

inline Mat fermion_matrix(const qcut::FermionSum& f, int n_modes) {
  const std::size_t dim = std::size_t{1} << n_modes;
  Mat total(dim);
  for (const auto& term : f.terms) {
    Mat prod = identity(dim);
    for (const auto& op : term.ops)
      prod = mul(prod, ladder_matrix(n_modes, op.mode, op.kind == qcut::LadderKind::create));
    total = add(total, scale(prod, term.coefficient));
  }
  return total;
}

inline Mat pauli_axis_matrix(qcut::PauliAxis axis) {
  Mat m(2);
  switch (axis) {
    case qcut::PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case qcut::PauliAxis::Y:
      m(0, 1) = C{0.0, -1.0};
      m(1, 0) = C{0.0, 1.0};
      break;
    case qcut::PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

/// Embeds a single-qubit operator on qubit q of an n-qubit register
/// (qubit 0 = least-significant index bit).
inline Mat embed_single(const Mat& u, int q, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::uint64_t mask = std::uint64_t{1} << q;
  Mat m(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const int bi = (i & mask) ? 1 : 0;
    for (int bo = 0; bo < 2; ++bo) {
      const C v = u(static_cast<std::size_t>(bo), static_cast<std::size_t>(bi));
      if (v == C{0.0, 0.0}) continue;
      const std::uint64_t o = bo ? (i | mask) : (i & ~mask);
      m(o, i) += v;
    }
  }
  return m;
}

inline Mat pauli_matrix(const qcut::PauliString& p, int n_qubits) {
  Mat m = identity(std::size_t{1} << n_qubits);
  for (const auto& [q, axis] : p.axes) m = mul(m, embed_single(pauli_axis_matrix(axis), q, n_qubits));
  return scale(m, p.coefficient);
}

inline Mat pauli_matrix(const qcut::PauliSum& sum, int n_qubits) {
  Mat m(std::size_t{1} << n_qubits);
  for (const auto& t : sum.terms) m = add(m, pauli_matrix(t, n_qubits));
  return m;
}

inline Mat gate_matrix(const qcut::Gate& g, int n_qubits) {
  using qcut::GateKind;
  const std::size_t dim = std::size_t{1} << n_qubits;
  const C i1{0.0, 1.0};

  auto single = [&](const Mat& u) { return embed_single(u, g.q0, n_qubits); };
  switch (g.kind) {
    case GateKind::X:
      return single(pauli_axis_matrix(qcut::PauliAxis::X));
    case GateKind::H: {
      Mat u(2);
      const double s = 1.0 / std::sqrt(2.0);
      u(0, 0) = s;
      u(0, 1) = s;
      u(1, 0) = s;
      u(1, 1) = -s;
      return single(u);
    }
    case GateKind::S: {
      Mat u = identity(2);
      u(1, 1) = i1;
      return single(u);
    }
    case GateKind::Sdg: {
      Mat u = identity(2);
      u(1, 1) = -i1;
      return single(u);
    }
    case GateKind::RX: {
      Mat u(2);
      u(0, 0) = std::cos(g.angle / 2);
      u(0, 1) = -i1 * std::sin(g.angle / 2);
      u(1, 0) = -i1 * std::sin(g.angle / 2);
      u(1, 1) = std::cos(g.angle / 2);
      return single(u);
    }
    case GateKind::RY: {
      Mat u(2);
      u(0, 0) = std::cos(g.angle / 2);
      u(0, 1) = -std::sin(g.angle / 2);
      u(1, 0) = std::sin(g.angle / 2);
      u(1, 1) = std::cos(g.angle / 2);
      return single(u);
    }
    case GateKind::RZ: {
      Mat u(2);
      u(0, 0) = std::exp(-i1 * (g.angle / 2));
      u(1, 1) = std::exp(i1 * (g.angle / 2));
      return single(u);
    }
    case GateKind::Phase: {
      Mat u = identity(2);
      u(1, 1) = std::exp(i1 * g.angle);
      return single(u);
    }
    case GateKind::CX: {
      Mat m(dim);
      const std::uint64_t cmask = std::uint64_t{1} << g.q0;
      const std::uint64_t tmask = std::uint64_t{1} << g.q1;
      for (std::uint64_t i = 0; i < dim; ++i)
        m((i & cmask) ? (i ^ tmask) : i, i) = 1.0;
      return m;
    }
    case GateKind::CZ:
    case GateKind::CP: {
      Mat m = identity(dim);
      const std::uint64_t both = (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
      const C phase = g.kind == GateKind::CZ ? C{-1.0, 0.0} : std::exp(i1 * g.angle);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & both) == both) m(i, i) = phase;
      return m;
    }
    case GateKind::RZZ: {
      Mat m = identity(dim);
      const std::uint64_t m0 = std::uint64_t{1} << g.q0;
      const std::uint64_t m1 = std::uint64_t{1} << g.q1;
      for (std::uint64_t i = 0; i < dim; ++i) {
        const bool odd = static_cast<bool>(i & m0) != static_cast<bool>(i & m1);
        m(i, i) = std::exp(i1 * (odd ? g.angle / 2 : -g.angle / 2));
      }
      return m;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

inline Mat circuit_unitary(const qcut::Circuit& c) {
  Mat u = identity(std::size_t{1} << c.n_qubits);
  for (const auto& g : c.gates) u = mul(gate_matrix(g, c.n_qubits), u);
  return u;
}

inline std::vector<C> apply(const Mat& m, const std::vector<C>& v) {
  std::vector<C> out(m.n, C{0.0, 0.0});
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// True when x == e^{i phi} y for some global phase.
inline bool equal_up_to_phase(const Mat& x, const Mat& y, double tol) {
  // Find the largest entry of y and align phases there.
  std::size_t best = 0;
  double best_abs = 0.0;
  for (std::size_t i = 0; i < y.a.size(); ++i)
    if (std::abs(y.a[i]) > best_abs) {
      best_abs = std::abs(y.a[i]);
      best = i;
    }
  if (best_abs < tol) return max_abs_diff(x, y) < tol;
  const C phase = x.a[best] / y.a[best];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return max_abs_diff(x, scale(y, phase)) < tol;
}

// ---- local-channel application (for the quasiprobability identity) ---------

/// Applies one side's local channel of a QPD term to a two-qubit density
/// matrix; side 0 acts on qubit 0 (LSB), side 1 on qubit 1.
inline Mat apply_local_channel(qcut::LocalOp op, int side, const Mat& rho) {
  const C i1{0.0, 1.0};
  auto conjugate = [&](const Mat& u2) {
    const Mat u = embed_single(u2, side, 2);
    return mul(u, mul(rho, dagger(u)));
  };
  switch (op) {
    case qcut::LocalOp::identity:
      return rho;
    case qcut::LocalOp::z_conjugation:
      return conjugate(pauli_axis_matrix(qcut::PauliAxis::Z));
    case qcut::LocalOp::s_plus: {
      Mat u(2);
      u(0, 0) = std::exp(i1 * (M_PI / 4));
      u(1, 1) = std::exp(-i1 * (M_PI / 4));
      return conjugate(u);
    }
    case qcut::LocalOp::s_minus: {
      Mat u(2);
      u(0, 0) = std::exp(-i1 * (M_PI / 4));
      u(1, 1) = std::exp(i1 * (M_PI / 4));
      return conjugate(u);
    }
    case qcut::LocalOp::signed_z_measure: {
      Mat p0(2), p1(2);
      p0(0, 0) = 1.0;
      p1(1, 1) = 1.0;
      const Mat e0 = embed_single(p0, side, 2);
      const Mat e1 = embed_single(p1, side, 2);
      return add(mul(e0, mul(rho, e0)), scale(mul(e1, mul(rho, e1)), C{-1.0, 0.0}));
    }
  }
  throw std::invalid_argument("unknown local op");
}

/// Sum_i a_i (A_i x B_i)(rho) for a two-qubit input density matrix.
inline Mat apply_qpd(const qcut::QPDDecomposition& d, const Mat& rho) {
  Mat out(4);
  for (const auto& term : d.terms) {
    Mat r = apply_local_channel(term.op_block0, 0, rho);
    r = apply_local_channel(term.op_block1, 1, r);
    out = add(out, scale(r, C{term.coefficient, 0.0}));
  }
  return out;
}

}  // namespace dense
