#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/error.hpp"

namespace qlayout {

enum class GateKind { Unary, Cnot, Swap };

/// One gate statement. `id` is the 1-based ordinal in program order; unary
/// and two-qubit gates share one numbering.
struct Gate {
  std::size_t id = 0;
  GateKind kind = GateKind::Unary;
  std::string name;    // as written, e.g. "h", "rz", "cx"
  std::string params;  // raw text between the parentheses, empty if none
  std::vector<std::size_t> operands;

  bool is_two_qubit() const { return kind != GateKind::Unary; }
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::string register_name = "q";
  std::vector<Gate> gates;

  std::size_t cnot_count() const;
  bool operator==(const Circuit&) const = default;
};

/// Parses the single-register OPENQASM 2.0 subset: one `qreg`, one-qubit
/// gates (kept opaque), `cx`, and `swap`. Throws QasmError.
Circuit parse_qasm(std::string_view text);

/// One statement per line; `parse_qasm(print_qasm(c)) == c`.
std::string print_qasm(const Circuit& circuit);

/// Renumbers gate ids 1..K in vector order.
void renumber(Circuit& circuit);

}  // namespace qlayout
