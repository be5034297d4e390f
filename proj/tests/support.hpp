#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qlayout/qasm.hpp"
#include "qlayout/reconstruct.hpp"

namespace qlayout::testing {

inline std::string data_path(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Circuit load_circuit(const std::string& name) { return parse_qasm(read_data(name)); }

/// Random circuit with `cnots` CNOTs on distinct operand pairs and a
/// sprinkling of unary gates from the simulator's vocabulary.
inline Circuit random_circuit(std::mt19937& rng, std::size_t qubits, std::size_t cnots, double unary_rate = 0.5) {
  static const char* unary[] = {"h", "x", "t", "tdg", "s", "sdg", "z", "y"};
  std::uniform_int_distribution<std::size_t> q(0, qubits - 1);
  std::uniform_int_distribution<std::size_t> u(0, std::size(unary) - 1);
  std::bernoulli_distribution add_unary(unary_rate);
  Circuit c;
  c.num_qubits = qubits;
  std::size_t placed = 0;
  while (placed < cnots) {
    if (add_unary(rng)) c.gates.push_back(Gate{0, GateKind::Unary, unary[u(rng)], "", {q(rng)}});
    std::size_t a = q(rng), b = q(rng);
    if (a == b) continue;
    c.gates.push_back(Gate{0, GateKind::Cnot, "cx", "", {a, b}});
    ++placed;
  }
  if (add_unary(rng)) c.gates.push_back(Gate{0, GateKind::Unary, "rz", "pi/3", {q(rng)}});
  renumber(c);
  return c;
}

/// Deletes the gates of routing swap `k` and its record, leaving the maps
/// untouched.
inline MappedCircuit remove_swap(MappedCircuit mapped, std::size_t k) {
  const SwapRecord rec = mapped.swaps.at(k);
  auto& gates = mapped.circuit.gates;
  gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(rec.gate_index),
              gates.begin() + static_cast<std::ptrdiff_t>(rec.gate_index + rec.gate_count));
  mapped.swaps.erase(mapped.swaps.begin() + static_cast<std::ptrdiff_t>(k));
  for (auto& s : mapped.swaps)
    if (s.gate_index > rec.gate_index) s.gate_index -= rec.gate_count;
  renumber(mapped.circuit);
  return mapped;
}

}  // namespace qlayout::testing
