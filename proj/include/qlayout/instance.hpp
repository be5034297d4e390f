#pragma once

#include <cstddef>

#include "qlayout/arch.hpp"
#include "qlayout/depgraph.hpp"
#include "qlayout/qasm.hpp"

namespace qlayout {

/// Everything the planners and plan checkers need about one routing problem.
struct RoutingInstance {
  std::size_t num_logical = 0;
  DepGraph dag;
  LayerSchedule layers;
  CouplingGraph graph;

  const DepNode* node(std::size_t gate_id) const;
};

/// Throws Error if the circuit contains swap gates (already routed) and
/// InfeasibleError if it needs more qubits than the platform has.
RoutingInstance make_instance(const Circuit& circuit, const CouplingGraph& graph);

}  // namespace qlayout
