#include "qlayout/simulator.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace qlayout {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  double parse() {
    double v = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("bad parameter expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }
  double product() {
    double v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  double power() {
    double base = primary();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }
  double primary() {
    skip();
    if (eat('(')) {
      double v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string rest(s_.substr(i_));
      std::size_t used = 0;
      double v = std::stod(rest, &used);
      i_ += used;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string word(s_.substr(start, i_ - start));
      if (word == "pi") return std::numbers::pi;
      double (*fn)(double) = nullptr;
      if (word == "sin") fn = [](double x) { return std::sin(x); };
      if (word == "cos") fn = [](double x) { return std::cos(x); };
      if (word == "tan") fn = [](double x) { return std::tan(x); };
      if (word == "exp") fn = [](double x) { return std::exp(x); };
      if (word == "ln") fn = [](double x) { return std::log(x); };
      if (word == "sqrt") fn = [](double x) { return std::sqrt(x); };
      if (!fn) fail("unknown identifier '" + word + "'");
      if (!eat('(')) fail("expected '(' after " + word);
      double v = sum();
      if (!eat(')')) fail("missing ')'");
      return fn(v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

struct Matrix2 {
  Amplitude m[2][2];
};

Matrix2 u3(double theta, double phi, double lambda) {
  using std::polar;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{{c, -polar(s, lambda)}, {polar(s, phi), polar(c, phi + lambda)}}};
}

Matrix2 phase(double lambda) { return {{{1, 0}, {0, std::polar(1.0, lambda)}}}; }

std::size_t arity_of(const std::string& name) {
  if (name == "rx" || name == "ry" || name == "rz" || name == "p" || name == "u1") return 1;
  if (name == "u2") return 2;
  if (name == "u3" || name == "u" || name == "U") return 3;
  return 0;
}

bool known_unary(const std::string& name) {
  static const char* names[] = {"id", "x", "y", "z", "h", "s", "sdg", "t", "tdg", "sx", "sxdg",
                                "rx", "ry", "rz", "p", "u1", "u2", "u3", "u", "U"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

Matrix2 unary_matrix(const Gate& g) {
  const auto params = split_params(g.params);
  if (params.size() != arity_of(g.name))
    throw Error("gate " + g.name + " expects " + std::to_string(arity_of(g.name)) + " parameters");
  std::vector<double> v;
  for (const auto& p : params) v.push_back(eval_param(p));
  const double pi = std::numbers::pi;
  const Amplitude i(0, 1);
  const double r = 1 / std::sqrt(2.0);
  const std::string& n = g.name;
  if (n == "id") return {{{1, 0}, {0, 1}}};
  if (n == "x") return {{{0, 1}, {1, 0}}};
  if (n == "y") return {{{0, -i}, {i, 0}}};
  if (n == "z") return phase(pi);
  if (n == "h") return {{{r, r}, {r, -r}}};
  if (n == "s") return phase(pi / 2);
  if (n == "sdg") return phase(-pi / 2);
  if (n == "t") return phase(pi / 4);
  if (n == "tdg") return phase(-pi / 4);
  if (n == "sx") return {{{(1.0 + i) / 2.0, (1.0 - i) / 2.0}, {(1.0 - i) / 2.0, (1.0 + i) / 2.0}}};
  if (n == "sxdg") return {{{(1.0 - i) / 2.0, (1.0 + i) / 2.0}, {(1.0 + i) / 2.0, (1.0 - i) / 2.0}}};
  if (n == "rx") return {{{std::cos(v[0] / 2), -i * std::sin(v[0] / 2)}, {-i * std::sin(v[0] / 2), std::cos(v[0] / 2)}}};
  if (n == "ry") return {{{std::cos(v[0] / 2), -std::sin(v[0] / 2)}, {std::sin(v[0] / 2), std::cos(v[0] / 2)}}};
  if (n == "rz") return {{{std::polar(1.0, -v[0] / 2), 0}, {0, std::polar(1.0, v[0] / 2)}}};
  if (n == "p" || n == "u1") return phase(v[0]);
  if (n == "u2") return u3(pi / 2, v[0], v[1]);
  if (n == "u3" || n == "u" || n == "U") return u3(v[0], v[1], v[2]);
  throw Error("no semantics for gate '" + n + "'");
}

}  // namespace

double eval_param(std::string_view expr) { return ExprParser(expr).parse(); }

std::vector<std::string> split_params(std::string_view params) {
  std::vector<std::string> out;
  if (params.find_first_not_of(" \t") == std::string_view::npos) return out;
  int depth = 0;
  std::string cur;
  for (char c : params) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool gate_supported(const Gate& gate) {
  if (gate.kind == GateKind::Cnot || gate.kind == GateKind::Swap) return gate.params.empty();
  if (!known_unary(gate.name)) return false;
  try {
    unary_matrix(gate);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Statevector::Statevector(std::size_t num_wires, std::size_t basis_index)
    : num_wires_(num_wires), amps_(std::size_t{1} << num_wires) {
  if (basis_index >= amps_.size()) throw Error("basis index out of range");
  amps_[basis_index] = 1;
}

double Statevector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::apply_1q(std::size_t w, const Amplitude m[2][2]) {
  const std::size_t bit = std::size_t{1} << w;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if (k & bit) continue;
    const Amplitude a0 = amps_[k], a1 = amps_[k | bit];
    amps_[k] = m[0][0] * a0 + m[0][1] * a1;
    amps_[k | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void Statevector::apply_cx(std::size_t c, std::size_t t) {
  const std::size_t cb = std::size_t{1} << c, tb = std::size_t{1} << t;
  for (std::size_t k = 0; k < amps_.size(); ++k)
    if ((k & cb) && !(k & tb)) std::swap(amps_[k], amps_[k | tb]);
}

void Statevector::apply_swap(std::size_t a, std::size_t b) {
  const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
  for (std::size_t k = 0; k < amps_.size(); ++k)
    if ((k & ab) && !(k & bb)) std::swap(amps_[k], amps_[(k & ~ab) | bb]);
}

void Statevector::apply(const Gate& gate, const std::vector<std::size_t>& wire_of) {
  std::vector<std::size_t> w;
  for (auto q : gate.operands) {
    if (q >= wire_of.size() || wire_of[q] >= num_wires_) throw Error("gate operand q[" + std::to_string(q) + "] has no wire");
    w.push_back(wire_of[q]);
  }
  switch (gate.kind) {
    case GateKind::Cnot: apply_cx(w[0], w[1]); return;
    case GateKind::Swap: apply_swap(w[0], w[1]); return;
    case GateKind::Unary: {
      const Matrix2 m = unary_matrix(gate);
      apply_1q(w[0], m.m);
      return;
    }
  }
}

void Statevector::run(const Circuit& circuit, const std::vector<std::size_t>& wire_of) {
  for (const auto& g : circuit.gates) apply(g, wire_of);
}

Circuit inverse(const Circuit& circuit) {
  Circuit out = circuit;
  out.gates.assign(circuit.gates.rbegin(), circuit.gates.rend());
  for (auto& g : out.gates) {
    if (!gate_supported(g)) throw Error("cannot invert unsupported gate '" + g.name + "'");
    if (g.kind != GateKind::Unary) continue;
    const std::string n = g.name;
    auto params = split_params(g.params);
    auto neg = [](const std::string& p) { return "-(" + p + ")"; };
    if (n == "s") g.name = "sdg";
    else if (n == "sdg") g.name = "s";
    else if (n == "t") g.name = "tdg";
    else if (n == "tdg") g.name = "t";
    else if (n == "sx") g.name = "sxdg";
    else if (n == "sxdg") g.name = "sx";
    else if (n == "rx" || n == "ry" || n == "rz" || n == "p" || n == "u1") g.params = neg(params[0]);
    else if (n == "u2") {
      // u2(a,b)^-1 = u3(-pi/2, -b, -a)
      g.name = "u3";
      g.params = "-pi/2," + neg(params[1]) + "," + neg(params[0]);
    } else if (n == "u3" || n == "u" || n == "U") {
      g.params = neg(params[0]) + "," + neg(params[2]) + "," + neg(params[1]);
    }
  }
  renumber(out);
  return out;
}

}  // namespace qlayout
