// SPDX-License-Identifier: Apache-2.0
#include "qcut/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace qcut {

ParseError::ParseError(int line_, int column_, std::string message_, std::string token_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(column_) + ": " + message_),
      line(line_),
      column(column_),
      message(std::move(message_)),
      token(std::move(token_)) {}

namespace {

enum class TokKind { identifier, number, string, symbol, arrow, end };

struct Token {
  TokKind kind = TokKind::end;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= src_.size()) return tok;

    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokKind::identifier;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        tok.text.push_back(advance());
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      tok.kind = TokKind::number;
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '.'))
        advance();
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          advance();
      }
      tok.text = src_.substr(start, pos_ - start);
      const char* first = tok.text.data();
      const char* last = first + tok.text.size();
      auto [ptr, ec] = std::from_chars(first, last, tok.number);
      if (ec != std::errc{} || ptr != last)
        throw ParseError(tok.line, tok.column, "malformed number literal", tok.text);
      return tok;
    }
    if (c == '"') {
      tok.kind = TokKind::string;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n')
        tok.text.push_back(advance());
      if (pos_ >= src_.size() || src_[pos_] != '"')
        throw ParseError(tok.line, tok.column, "unterminated string literal", tok.text);
      advance();
      return tok;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      tok.kind = TokKind::arrow;
      tok.text = "->";
      advance();
      advance();
      return tok;
    }
    if (std::strchr(";,()[]{}+-*/=<>!", c) != nullptr) {
      tok.kind = TokKind::symbol;
      tok.text.push_back(advance());
      return tok;
    }
    throw ParseError(tok.line, tok.column, "unexpected character", std::string(1, c));
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct GateSpec {
  GateKind kind;
  int n_params;
  int n_operands;
};

std::optional<GateSpec> lookup_gate(const std::string& name) {
  if (name == "x") return GateSpec{GateKind::X, 0, 1};
  if (name == "h") return GateSpec{GateKind::H, 0, 1};
  if (name == "s") return GateSpec{GateKind::S, 0, 1};
  if (name == "sdg") return GateSpec{GateKind::Sdg, 0, 1};
  if (name == "rx") return GateSpec{GateKind::RX, 1, 1};
  if (name == "ry") return GateSpec{GateKind::RY, 1, 1};
  if (name == "rz") return GateSpec{GateKind::RZ, 1, 1};
  if (name == "p" || name == "u1") return GateSpec{GateKind::Phase, 1, 1};
  if (name == "cx") return GateSpec{GateKind::CX, 0, 2};
  if (name == "cz") return GateSpec{GateKind::CZ, 0, 2};
  if (name == "cp" || name == "cu1") return GateSpec{GateKind::CP, 1, 2};
  if (name == "rzz") return GateSpec{GateKind::RZZ, 1, 2};
  return std::nullopt;
}

class Parser {
 public:
  Parser(const std::string& src, const ParseOptions& opts) : lexer_(src), opts_(opts) {
    bump();
  }

  Circuit parse() {
    expect_identifier("OPENQASM");
    expect(TokKind::number, "format version");
    expect_symbol(";");

    while (tok_.kind != TokKind::end) statement();

    Circuit c(total_qubits_);
    for (const auto& g : gates_) c.gates.push_back(g);
    return c;
  }

 private:
  void bump() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(tok_.line, tok_.column, message, tok_.text);
  }

  void expect_identifier(const std::string& name) {
    if (tok_.kind != TokKind::identifier || tok_.text != name) fail("expected '" + name + "'");
    bump();
  }

  Token expect(TokKind kind, const std::string& what) {
    if (tok_.kind != kind) fail("expected " + what);
    Token t = tok_;
    bump();
    return t;
  }

  void expect_symbol(const std::string& sym) {
    if (tok_.kind != TokKind::symbol || tok_.text != sym) fail("expected '" + sym + "'");
    bump();
  }

  bool at_symbol(const std::string& sym) const {
    return tok_.kind == TokKind::symbol && tok_.text == sym;
  }

  void warn(const std::string& message) const {
    if (opts_.warn) opts_.warn(message);
  }

  void skip_to_semicolon() {
    while (tok_.kind != TokKind::end && !at_symbol(";")) bump();
    if (tok_.kind == TokKind::end) fail("expected ';'");
    bump();
  }

  int expect_nonnegative_int(const std::string& what) {
    const Token t = expect(TokKind::number, what);
    const double value = t.number;
    if (value < 0 || value != std::floor(value) || value > 1e9)
      throw ParseError(t.line, t.column, "expected a small non-negative integer", t.text);
    return static_cast<int>(value);
  }

  void statement() {
    if (tok_.kind != TokKind::identifier) fail("expected a statement");
    const std::string name = tok_.text;

    if (name == "include") {
      bump();
      expect(TokKind::string, "include file name");
      expect_symbol(";");
      return;
    }
    if (name == "qreg") {
      bump();
      const Token reg = expect(TokKind::identifier, "register name");
      expect_symbol("[");
      const int size = expect_nonnegative_int("register size");
      expect_symbol("]");
      expect_symbol(";");
      if (qregs_.count(reg.text))
        throw ParseError(reg.line, reg.column, "duplicate register name", reg.text);
      qregs_[reg.text] = {total_qubits_, size};
      total_qubits_ += size;
      return;
    }
    if (name == "creg") {
      bump();
      warn("classical register ignored");
      skip_to_semicolon();
      return;
    }
    if (name == "measure") {
      bump();
      warn("measurement ignored");
      skip_to_semicolon();
      return;
    }
    if (name == "barrier") {
      bump();
      skip_to_semicolon();
      return;
    }

    const auto spec = lookup_gate(name);
    if (!spec) fail("unknown gate '" + name + "'");
    bump();

    std::vector<double> params;
    if (at_symbol("(")) {
      bump();
      params.push_back(parse_expr());
      while (at_symbol(",")) {
        bump();
        params.push_back(parse_expr());
      }
      expect_symbol(")");
    }
    if (static_cast<int>(params.size()) != spec->n_params)
      fail("gate '" + name + "' takes " + std::to_string(spec->n_params) + " parameter(s)");

    std::vector<int> operands;
    operands.push_back(parse_operand());
    while (at_symbol(",")) {
      bump();
      operands.push_back(parse_operand());
    }
    if (static_cast<int>(operands.size()) != spec->n_operands)
      fail("gate '" + name + "' takes " + std::to_string(spec->n_operands) + " operand(s)");
    if (spec->n_operands == 2 && operands[0] == operands[1])
      fail("two-qubit gate operands must be distinct");
    expect_symbol(";");

    Gate g;
    g.kind = spec->kind;
    g.q0 = operands[0];
    g.q1 = spec->n_operands == 2 ? operands[1] : -1;
    g.angle = params.empty() ? 0.0 : params[0];
    gates_.push_back(g);
  }

  int parse_operand() {
    const Token reg = expect(TokKind::identifier, "register operand");
    const auto it = qregs_.find(reg.text);
    if (it == qregs_.end())
      throw ParseError(reg.line, reg.column, "unknown register", reg.text);
    expect_symbol("[");
    const Token idx_tok = tok_;
    const int idx = expect_nonnegative_int("qubit index");
    if (idx >= it->second.second)
      throw ParseError(idx_tok.line, idx_tok.column, "qubit index out of range for register",
                       idx_tok.text);
    expect_symbol("]");
    return it->second.first + idx;
  }

  // expr := term (('+'|'-') term)*
  double parse_expr() {
    double value = parse_term();
    while (at_symbol("+") || at_symbol("-")) {
      const bool minus = tok_.text == "-";
      bump();
      const double rhs = parse_term();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  double parse_term() {
    double value = parse_factor();
    while (at_symbol("*") || at_symbol("/")) {
      const bool divide = tok_.text == "/";
      bump();
      const double rhs = parse_factor();
      value = divide ? value / rhs : value * rhs;
    }
    return value;
  }

  double parse_factor() {
    if (at_symbol("-")) {
      bump();
      return -parse_factor();
    }
    if (at_symbol("+")) {
      bump();
      return parse_factor();
    }
    if (at_symbol("(")) {
      bump();
      const double value = parse_expr();
      expect_symbol(")");
      return value;
    }
    if (tok_.kind == TokKind::number) {
      const double value = tok_.number;
      bump();
      return value;
    }
    if (tok_.kind == TokKind::identifier && tok_.text == "pi") {
      bump();
      return std::numbers::pi;
    }
    fail("expected an angle expression");
  }

  Lexer lexer_;
  ParseOptions opts_;
  Token tok_;
  std::map<std::string, std::pair<int, int>> qregs_;  // name -> (offset, size)
  int total_qubits_ = 0;
  std::vector<Gate> gates_;
};

std::string format_angle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).parse();
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.n_qubits << "];\n";
  for (const auto& g : c.gates) {
    os << gate_name(g.kind);
    if (has_angle(g.kind)) os << "(" << format_angle(g.angle) << ")";
    os << " q[" << g.q0 << "]";
    if (is_two_qubit(g.kind)) os << ",q[" << g.q1 << "]";
    os << ";\n";
  }
  return os.str();
}

PauliSum parse_pauli_text(const std::string& text, int n_qubits) {
  Lexer lexer(text);
  Token tok = lexer.next();

  PauliSum sum(n_qubits);
  bool first = true;
  while (tok.kind != TokKind::end) {
    double sign = 1.0;
    if (tok.kind == TokKind::symbol && (tok.text == "+" || tok.text == "-")) {
      if (tok.text == "-") sign = -1.0;
      tok = lexer.next();
    } else if (!first) {
      throw ParseError(tok.line, tok.column, "expected '+' or '-' between terms", tok.text);
    }
    first = false;

    if (tok.kind != TokKind::number)
      throw ParseError(tok.line, tok.column, "expected a coefficient", tok.text);
    const double coeff = sign * tok.number;
    tok = lexer.next();

    if (tok.kind != TokKind::symbol || tok.text != "*")
      throw ParseError(tok.line, tok.column, "expected '*' after the coefficient", tok.text);
    tok = lexer.next();

    PauliString term;
    term.coefficient = Complex{coeff, 0.0};
    bool any = false;
    while (tok.kind == TokKind::identifier) {
      const std::string& t = tok.text;
      const char axis_char = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
      if (t.size() < 2 || (axis_char != 'X' && axis_char != 'Y' && axis_char != 'Z'))
        throw ParseError(tok.line, tok.column, "expected a Pauli factor like Z0", t);
      int qubit = 0;
      const char* first_digit = t.data() + 1;
      const char* last = t.data() + t.size();
      auto [ptr, ec] = std::from_chars(first_digit, last, qubit);
      if (ec != std::errc{} || ptr != last)
        throw ParseError(tok.line, tok.column, "expected a Pauli factor like Z0", t);
      if (qubit >= n_qubits)
        throw ParseError(tok.line, tok.column, "qubit index out of range", t);
      const PauliAxis axis = axis_char == 'X'   ? PauliAxis::X
                             : axis_char == 'Y' ? PauliAxis::Y
                                                : PauliAxis::Z;
      if (!term.axes.emplace(qubit, axis).second)
        throw ParseError(tok.line, tok.column, "duplicate qubit in Pauli term", t);
      any = true;
      tok = lexer.next();
    }
    if (!any)
      throw ParseError(tok.line, tok.column, "expected at least one Pauli factor", tok.text);
    sum += term;
  }
  if (sum.empty()) throw ParseError(1, 1, "empty observable", "");
  return sum;
}

}  // namespace qcut
