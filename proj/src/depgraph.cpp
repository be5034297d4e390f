#include "qlayout/depgraph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace qlayout {

DepGraph build_depgraph(const Circuit& circuit) {
  std::vector<std::optional<std::size_t>> last_cnot(circuit.num_qubits);
  DepGraph dag;
  for (const auto& g : circuit.gates) {
    if (g.kind != GateKind::Cnot) continue;
    DepNode node{g.id, {g.operands[0], g.operands[1]}, {InputQubit{g.operands[0]}, InputQubit{g.operands[1]}}};
    for (std::size_t i = 0; i < 2; ++i) {
      if (auto prev = last_cnot[g.operands[i]]) node.preds[i] = GateRef{*prev};
    }
    last_cnot[g.operands[0]] = g.id;
    last_cnot[g.operands[1]] = g.id;
    dag.push_back(node);
  }
  return dag;
}

LayerSchedule build_layers(const Circuit& circuit) {
  LayerSchedule schedule;
  std::vector<std::size_t> qubit_layer(circuit.num_qubits, 0);
  for (const auto& g : circuit.gates) {
    std::size_t layer = 0;
    for (auto q : g.operands) layer = std::max(layer, qubit_layer[q]);
    ++layer;
    for (auto q : g.operands) qubit_layer[q] = layer;
    schedule.depth_of[g.id] = layer;
    schedule.num_layers = std::max(schedule.num_layers, layer);
    if (g.kind == GateKind::Cnot) schedule.cnot_depths.push_back(layer);
  }
  std::sort(schedule.cnot_depths.begin(), schedule.cnot_depths.end());
  schedule.cnot_depths.erase(std::unique(schedule.cnot_depths.begin(), schedule.cnot_depths.end()),
                             schedule.cnot_depths.end());
  return schedule;
}

std::string to_dot(const DepGraph& dag, std::size_t num_qubits) {
  std::ostringstream out;
  out << "digraph cnots {\n";
  for (std::size_t l = 0; l < num_qubits; ++l) out << "  l" << l << " [shape=box];\n";
  for (const auto& node : dag) {
    out << "  g" << node.gate_id << " [label=\"g" << node.gate_id << "\\nl" << node.qubits[0] << ",l"
        << node.qubits[1] << "\"];\n";
    for (const auto& p : node.preds) {
      if (auto in = std::get_if<InputQubit>(&p))
        out << "  l" << in->qubit << " -> g" << node.gate_id << ";\n";
      else
        out << "  g" << std::get<GateRef>(p).id << " -> g" << node.gate_id << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlayout
