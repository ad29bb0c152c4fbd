// SPDX-License-Identifier: Apache-2.0
#include "qcut/encoding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcut {

namespace {

// Single-qubit Pauli product table: (lhs, rhs) -> (axis or 0 for identity,
// phase). Axes are 1=X, 2=Y, 3=Z; the phase is one of {1, i, -i}.
struct AxisProduct {
  int axis;
  Complex phase;
};

AxisProduct axis_product(PauliAxis a, PauliAxis b) {
  if (a == b) return {0, {1.0, 0.0}};
  const int ai = static_cast<int>(a), bi = static_cast<int>(b);
  // X*Y=iZ, Y*Z=iX, Z*X=iY; reversed order flips the sign.
  const int ci = 6 - ai - bi;
  const bool forward = (ai == 1 && bi == 2) || (ai == 2 && bi == 3) || (ai == 3 && bi == 1);
  return {ci, Complex{0.0, forward ? 1.0 : -1.0}};
}

}  // namespace

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out;
  out.coefficient = coefficient * rhs.coefficient;
  out.axes = axes;
  for (const auto& [q, axis] : rhs.axes) {
    auto it = out.axes.find(q);
    if (it == out.axes.end()) {
      out.axes.emplace(q, axis);
      continue;
    }
    auto prod = axis_product(it->second, axis);
    out.coefficient *= prod.phase;
    if (prod.axis == 0)
      out.axes.erase(it);
    else
      it->second = static_cast<PauliAxis>(prod.axis);
  }
  return out;
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  os << coefficient.real();
  if (coefficient.imag() != 0.0) os << (coefficient.imag() < 0 ? "-" : "+")
                                    << std::abs(coefficient.imag()) << "i";
  os << "*";
  if (axes.empty()) os << "I";
  for (const auto& [q, axis] : axes) os << "XYZ"[static_cast<int>(axis) - 1] << q;
  return os.str();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  n_qubits = std::max(n_qubits, other.n_qubits);
  return *this;
}

PauliSum PauliSum::operator*(const PauliSum& rhs) const {
  PauliSum out(std::max(n_qubits, rhs.n_qubits));
  out.terms.reserve(terms.size() * rhs.terms.size());
  for (const auto& a : terms)
    for (const auto& b : rhs.terms) out.terms.push_back(a * b);
  return out;
}

double PauliSum::max_imag_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, std::abs(t.coefficient.imag()));
  return m;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << terms[i].to_string();
  }
  return os.str();
}

PauliSum pauli_simplify(const PauliSum& p) {
  std::map<std::map<int, PauliAxis>, Complex> merged;
  for (const auto& t : p.terms) merged[t.axes] += t.coefficient;

  PauliSum out(p.n_qubits);
  for (auto& [axes, coeff] : merged) {
    if (std::abs(coeff) < kCoefficientZeroTol) continue;
    out.terms.push_back({coeff, axes});
  }
  return out;
}

// ---- Fenwick tree -----------------------------------------------------------

FenwickTree::FenwickTree(int n_modes) : n_(n_modes) {
  if (n_modes <= 0) throw std::invalid_argument("mode count must be positive");
  parent_.assign(static_cast<std::size_t>(n_), -1);
  children_.assign(static_cast<std::size_t>(n_), {});

  // Recursive bisection: the midpoint of [left, right) hangs off `parent`,
  // then both halves are processed. Root is node n-1.
  auto build = [&](auto&& self, int left, int right, int parent) -> void {
    if (left >= right) return;
    const int pivot = (left + right) >> 1;
    parent_[static_cast<std::size_t>(pivot)] = parent;
    children_[static_cast<std::size_t>(parent)].push_back(pivot);
    self(self, left, pivot, pivot);
    self(self, pivot + 1, right, parent);
  };
  build(build, 0, n_ - 1, n_ - 1);
  for (auto& c : children_) std::sort(c.begin(), c.end());
}

std::vector<int> FenwickTree::update_set(int j) const {
  std::vector<int> out;
  for (int node = parent_[static_cast<std::size_t>(j)]; node != -1;
       node = parent_[static_cast<std::size_t>(node)])
    out.push_back(node);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FenwickTree::children_set(int j) const {
  return children_[static_cast<std::size_t>(j)];
}

std::vector<int> FenwickTree::remainder_set(int j) const {
  std::vector<int> out;
  for (int anc : update_set(j))
    for (int c : children_[static_cast<std::size_t>(anc)])
      if (c < j) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FenwickTree::parity_set(int j) const {
  auto out = children_set(j);
  auto rem = remainder_set(j);
  out.insert(out.end(), rem.begin(), rem.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FenwickTree::subtree(int j) const {
  std::vector<int> out{j};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : children_[static_cast<std::size_t>(out[i])]) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- ladder-operator images -------------------------------------------------

namespace {

void check_modes(const FermionSum& f, int n_modes) {
  if (f.max_mode() >= n_modes)
    throw std::out_of_range("ladder operator mode index exceeds mode count");
}

// 1/2 (X_p -+ i Y_p) * Z_{p-1} ... Z_0; minus for creation, plus for
// annihilation.
PauliSum jw_ladder(const LadderOp& op, int n_modes) {
  (void)n_modes;
  std::map<int, PauliAxis> zstring;
  for (int q = 0; q < op.mode; ++q) zstring.emplace(q, PauliAxis::Z);

  PauliString xpart{Complex{0.5, 0.0}, zstring};
  xpart.axes.emplace(op.mode, PauliAxis::X);
  const double ysign = op.kind == LadderKind::create ? -0.5 : 0.5;
  PauliString ypart{Complex{0.0, ysign}, zstring};
  ypart.axes.emplace(op.mode, PauliAxis::Y);

  PauliSum out(op.mode + 1);
  out += xpart;
  out += ypart;
  return out;
}

// 1/2 (X_U X_j Z_P -+ i X_U Y_j Z_R) with U/P/R the Fenwick update, parity
// and remainder sets of mode j.
PauliSum bk_ladder(const LadderOp& op, const FenwickTree& tree) {
  std::map<int, PauliAxis> xu;
  for (int q : tree.update_set(op.mode)) xu.emplace(q, PauliAxis::X);

  PauliString xpart{Complex{0.5, 0.0}, xu};
  xpart.axes.emplace(op.mode, PauliAxis::X);
  for (int q : tree.parity_set(op.mode)) xpart.axes.emplace(q, PauliAxis::Z);

  const double ysign = op.kind == LadderKind::create ? -0.5 : 0.5;
  PauliString ypart{Complex{0.0, ysign}, xu};
  ypart.axes.emplace(op.mode, PauliAxis::Y);
  for (int q : tree.remainder_set(op.mode)) ypart.axes.emplace(q, PauliAxis::Z);

  PauliSum out(op.mode + 1);
  out += xpart;
  out += ypart;
  return out;
}

template <typename LadderImage>
PauliSum encode_with(const FermionSum& f, int n_modes, LadderImage&& image) {
  PauliSum total(n_modes);
  for (const auto& term : f.terms) {
    PauliSum product(n_modes);
    product += PauliString{term.coefficient, {}};
    for (const auto& op : term.ops) product = product * image(op);
    total += product;
  }
  return pauli_simplify(total);
}

}  // namespace

PauliSum jordan_wigner(const FermionSum& f, int n_modes) {
  check_modes(f, n_modes);
  return encode_with(f, n_modes, [&](const LadderOp& op) { return jw_ladder(op, n_modes); });
}

PauliSum bravyi_kitaev(const FermionSum& f, int n_modes) {
  check_modes(f, n_modes);
  FenwickTree tree(n_modes);
  return encode_with(f, n_modes, [&](const LadderOp& op) { return bk_ladder(op, tree); });
}

PauliSum encode(const FermionSum& f, int n_modes, Encoding enc) {
  return enc == Encoding::jordan_wigner ? jordan_wigner(f, n_modes)
                                        : bravyi_kitaev(f, n_modes);
}

std::vector<std::uint8_t> encode_reference(const OccupationVector& occ, Encoding enc) {
  if (enc == Encoding::jordan_wigner) return occ.bits;
  if (occ.size() == 0) return {};
  FenwickTree tree(occ.size());
  std::vector<std::uint8_t> bits(occ.bits.size(), 0);
  for (int j = 0; j < occ.size(); ++j) {
    int parity = 0;
    for (int m : tree.subtree(j)) parity ^= occ.bits[static_cast<std::size_t>(m)];
    bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(parity);
  }
  return bits;
}

}  // namespace qcut
