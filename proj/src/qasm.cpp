#include "qlayout/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace qlayout {

std::size_t Circuit::cnot_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::Cnot; }));
}

void renumber(Circuit& circuit) {
  std::size_t next = 1;
  for (auto& g : circuit.gates) g.id = next++;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Cursor over the source text with comments already blanked out.
class Scanner {
 public:
  explicit Scanner(std::string text) : text_(std::move(text)) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), at);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    std::size_t column = at - line_starts_[line - 1] + 1;
    throw QasmError(what, line, column);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range", start);
    return value;
  }

  // Raw token run up to (not including) ';', used for the version number
  // and include file name.
  std::string until_semicolon() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ';') ++pos_;
    std::string s = text_.substr(start, pos_ - start);
    while (!s.empty() && is_space(s.back())) s.pop_back();
    return s;
  }

  // Balanced text between '(' and the matching ')'; the '(' is already consumed.
  std::string parenthesized() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') break;
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) {
        std::string inner = text_.substr(start, pos_ - start);
        ++pos_;
        std::string out;
        for (char ch : inner)
          if (!is_space(ch)) out.push_back(ch);
        return out;
      }
      ++pos_;
    }
    fail("unbalanced parentheses in gate parameters", start);
  }

 private:
  std::string text_;
  std::vector<std::size_t> line_starts_;
  std::size_t pos_ = 0;
};

std::string strip_comments(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] == '/' && out[i + 1] == '/') {
      while (i < out.size() && out[i] != '\n') out[i++] = ' ';
    }
  }
  return out;
}

bool is_rejected_keyword(const std::string& word) {
  static const char* const kRejected[] = {"creg", "measure", "barrier", "if", "gate", "opaque", "reset"};
  return std::any_of(std::begin(kRejected), std::end(kRejected), [&](const char* k) { return word == k; });
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Scanner in(strip_comments(text));
  Circuit circuit;

  if (in.at_end()) in.fail("empty program; expected 'OPENQASM 2.0;'");
  {
    std::size_t at = in.pos();
    if (in.identifier() != "OPENQASM") in.fail("program must start with 'OPENQASM 2.0;'", at);
    std::size_t vat = in.pos();
    std::string version = in.until_semicolon();
    if (version != "2.0" && version != "2") in.fail("unsupported OPENQASM version '" + version + "'", vat);
    in.expect(';');
  }

  bool have_qreg = false;
  while (!in.at_end()) {
    std::size_t stmt = in.pos();
    std::string word = in.identifier();

    if (word == "include") {
      in.until_semicolon();
      in.expect(';');
      continue;
    }
    if (word == "qreg") {
      if (have_qreg) in.fail("unsupported statement 'qreg': only one quantum register is supported", stmt);
      circuit.register_name = in.identifier();
      in.expect('[');
      circuit.num_qubits = in.integer();
      in.expect(']');
      in.expect(';');
      have_qreg = true;
      continue;
    }
    if (is_rejected_keyword(word)) in.fail("unsupported statement '" + word + "'", stmt);
    if (word == "OPENQASM") in.fail("duplicate OPENQASM header", stmt);

    Gate gate;
    gate.name = word;
    if (in.accept('(')) gate.params = in.parenthesized();
    do {
      std::size_t at = in.pos();
      std::string reg = in.identifier();
      if (!have_qreg) in.fail("gate '" + word + "' used before qreg declaration", at);
      if (reg != circuit.register_name) in.fail("unknown register '" + reg + "'", at);
      if (!in.peek('['))
        in.fail("unsupported statement '" + word + "': whole-register application", in.pos());
      in.expect('[');
      std::size_t index_at = in.pos();
      std::size_t index = in.integer();
      in.expect(']');
      if (index >= circuit.num_qubits)
        in.fail("operand " + reg + "[" + std::to_string(index) + "] out of range (register has " +
                    std::to_string(circuit.num_qubits) + " qubits)",
                index_at);
      gate.operands.push_back(index);
    } while (in.accept(','));
    in.expect(';');

    if (gate.operands.size() == 1) {
      gate.kind = GateKind::Unary;
    } else if (gate.operands.size() == 2 && (word == "cx" || word == "CX") && gate.params.empty()) {
      gate.kind = GateKind::Cnot;
      gate.name = "cx";
    } else if (gate.operands.size() == 2 && word == "swap" && gate.params.empty()) {
      gate.kind = GateKind::Swap;
    } else {
      in.fail("unsupported statement '" + word + "' on " + std::to_string(gate.operands.size()) + " qubits", stmt);
    }
    if (gate.is_two_qubit() && gate.operands[0] == gate.operands[1])
      in.fail("gate '" + word + "' needs two distinct operands", stmt);

    gate.id = circuit.gates.size() + 1;
    circuit.gates.push_back(std::move(gate));
  }
  if (!have_qreg) throw QasmError("missing qreg declaration", 1, 1);
  return circuit;
}

std::string print_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg " << circuit.register_name << "[" << circuit.num_qubits << "];\n";
  const std::string& r = circuit.register_name;
  for (const auto& g : circuit.gates) {
    out << g.name;
    if (!g.params.empty()) out << "(" << g.params << ")";
    out << " ";
    for (std::size_t i = 0; i < g.operands.size(); ++i) {
      if (i) out << ", ";
      out << r << "[" << g.operands[i] << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qlayout
