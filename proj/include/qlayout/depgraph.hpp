#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qlayout/qasm.hpp"

namespace qlayout {

/// Dependency on the logical input wire itself (no earlier CNOT on it).
struct InputQubit {
  std::size_t qubit;
  bool operator==(const InputQubit&) const = default;
};

/// Dependency on an earlier CNOT, by gate id.
struct GateRef {
  std::size_t id;
  bool operator==(const GateRef&) const = default;
};

using Pred = std::variant<InputQubit, GateRef>;

inline bool is_input(const Pred& p) { return std::holds_alternative<InputQubit>(p); }

/// A CNOT with its two direct CNOT-level dependencies. preds[i] belongs to
/// qubits[i]; unary gates are looked through.
struct DepNode {
  std::size_t gate_id;
  std::array<std::size_t, 2> qubits;  // control, target
  std::array<Pred, 2> preds;

  bool operator==(const DepNode&) const = default;
};

using DepGraph = std::vector<DepNode>;

struct LayerSchedule {
  std::map<std::size_t, std::size_t> depth_of;  // gate id -> 1-based layer
  std::vector<std::size_t> cnot_depths;         // ascending layers holding a CNOT
  std::size_t num_layers = 0;
};

/// One node per CNOT in program order. Two-qubit swap gates in the input are
/// not CNOTs and are rejected by callers before this point.
DepGraph build_depgraph(const Circuit& circuit);

/// ASAP layering over all gates.
LayerSchedule build_layers(const Circuit& circuit);

/// Graphviz dump of the CNOT DAG, inputs drawn as `l<i>` nodes.
std::string to_dot(const DepGraph& dag, std::size_t num_qubits);

}  // namespace qlayout
