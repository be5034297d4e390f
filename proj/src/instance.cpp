#include "qlayout/instance.hpp"

#include <algorithm>

namespace qlayout {

const DepNode* RoutingInstance::node(std::size_t gate_id) const {
  auto it = std::lower_bound(dag.begin(), dag.end(), gate_id,
                             [](const DepNode& n, std::size_t id) { return n.gate_id < id; });
  return (it != dag.end() && it->gate_id == gate_id) ? &*it : nullptr;
}

RoutingInstance make_instance(const Circuit& circuit, const CouplingGraph& graph) {
  for (const auto& g : circuit.gates)
    if (g.kind == GateKind::Swap)
      throw Error("input circuit already contains swap gates (gate " + std::to_string(g.id) + ")");
  if (circuit.num_qubits > graph.num_pqubits())
    throw InfeasibleError("circuit has " + std::to_string(circuit.num_qubits) + " logical qubits but platform " +
                          graph.name() + " has only " + std::to_string(graph.num_pqubits()));
  return RoutingInstance{circuit.num_qubits, build_depgraph(circuit), build_layers(circuit), graph};
}

}  // namespace qlayout
