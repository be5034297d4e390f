#include "qlayout/pddl_encode.hpp"

#include <sstream>

#include "qlayout/error.hpp"

namespace qlayout {

std::string_view to_string(EncodingModel model) {
  switch (model) {
    case EncodingModel::Global: return "global";
    case EncodingModel::LiftedInitial: return "lifted_initial";
    case EncodingModel::LiftedCompact: return "lifted_compact";
    case EncodingModel::LocalCompact: return "local";
  }
  return "?";
}

EncodingModel parse_encoding_model(std::string_view name) {
  if (name == "global") return EncodingModel::Global;
  if (name == "lifted_initial") return EncodingModel::LiftedInitial;
  if (name == "lifted_compact") return EncodingModel::LiftedCompact;
  if (name == "local" || name == "local_compact") return EncodingModel::LocalCompact;
  throw Error("unknown encoding model '" + std::string(name) +
              "' (expected global, lifted_initial, lifted_compact or local)");
}

std::string lname(std::size_t l) { return "l" + std::to_string(l); }
std::string pname(std::size_t p) { return "p" + std::to_string(p); }
std::string gname(std::size_t id) { return "g" + std::to_string(id); }
std::string dname(std::size_t layer) { return "d" + std::to_string(layer); }

namespace {

bool with_costs(const EncodingConfig& cfg) { return cfg.swap_cost != 1; }

CouplingGraph effective_graph(const CouplingGraph& graph, const EncodingConfig& cfg) {
  return cfg.bidirectional ? bidirectionalize(graph) : graph;
}

void requirements(std::ostream& out, const EncodingConfig& cfg) {
  out << "  (:requirements :strips :typing\n"
      << "                 :negative-preconditions" << (with_costs(cfg) ? " :action-costs" : "") << ")\n";
}

void functions(std::ostream& out, const EncodingConfig& cfg) {
  if (with_costs(cfg)) out << "  (:functions (total-cost) - number)\n";
}

std::string cost_effect(const EncodingConfig& cfg) {
  return with_costs(cfg) ? "\n      (increase (total-cost) " + std::to_string(cfg.swap_cost) + ")" : "";
}

// `occupancy` is the predicate marking a physical qubit as in use:
// mapped_pq for the layered model, occupied for the local ones.
void swap_actions(std::ostream& out, const EncodingConfig& cfg, const std::string& occupancy) {
  out << "  (:action swap\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit)\n"
      << "   :precondition (and (connected ?p1 ?p2)\n"
      << "      (mapped ?l1 ?p1) (mapped ?l2 ?p2))\n"
      << "   :effect (and\n"
      << "      (not (mapped ?l1 ?p1)) (mapped ?l1 ?p2)\n"
      << "      (not (mapped ?l2 ?p2)) (mapped ?l2 ?p1)" << cost_effect(cfg) << "))\n";
  if (!cfg.ancillary_swaps) return;
  out << "  (:action swap-ancillary1\n"
      << "   :parameters (?l1 - lqubit\n"
      << "                ?p1 ?p2 - pqubit)\n"
      << "   :precondition (and (connected ?p1 ?p2)\n"
      << "      (mapped ?l1 ?p1) (not (" << occupancy << " ?p2)))\n"
      << "   :effect (and\n"
      << "      (not (mapped ?l1 ?p1)) (mapped ?l1 ?p2)\n"
      << "      (not (" << occupancy << " ?p1)) (" << occupancy << " ?p2)" << cost_effect(cfg) << "))\n"
      << "  (:action swap-ancillary2\n"
      << "   :parameters (?l2 - lqubit ?p1 ?p2 - pqubit)\n"
      << "   :precondition (and (connected ?p1 ?p2)\n"
      << "      (mapped ?l2 ?p2) (not (" << occupancy << " ?p1)))\n"
      << "   :effect (and\n"
      << "      (not (mapped ?l2 ?p2)) (mapped ?l2 ?p1)\n"
      << "      (not (" << occupancy << " ?p2)) (" << occupancy << " ?p1)" << cost_effect(cfg) << "))\n";
}

void pqubit_objects(std::ostream& out, const CouplingGraph& graph) {
  for (std::size_t p = 0; p < graph.num_pqubits(); ++p) out << (p ? " " : "") << pname(p);
  out << " - pqubit";
}

void connected_facts(std::ostream& out, const CouplingGraph& graph) {
  for (const auto& [a, b] : graph.edges()) out << "  (connected " << pname(a) << " " << pname(b) << ")\n";
}

void cost_init(std::ostream& out, const EncodingConfig& cfg) {
  if (with_costs(cfg)) out << "  (= (total-cost) 0)\n";
}

void metric(std::ostream& out, const EncodingConfig& cfg) {
  if (with_costs(cfg)) out << "(:metric minimize (total-cost))\n";
}

std::string pred_object(const Pred& p) {
  if (auto in = std::get_if<InputQubit>(&p)) return lname(in->qubit);
  return gname(std::get<GateRef>(p).id);
}

}  // namespace

PddlPair emit_global(const Circuit& circuit, const LayerSchedule& layers, const CouplingGraph& input_graph,
                     const EncodingConfig& cfg) {
  const CouplingGraph graph = effective_graph(input_graph, cfg);
  std::ostringstream d;
  d << "(define (domain Quantum)\n";
  requirements(d, cfg);
  d << "  (:types lqubit pqubit depth)\n"
    << "  (:predicates\n"
    << "    (mapped ?l - lqubit ?p - pqubit)\n"
    << "    (mapped_lq ?l - lqubit)\n"
    << "    (mapped_pq ?p - pqubit)\n"
    << "    (current_depth ?d - depth)\n"
    << "    (next_depth ?d1 ?d2 - depth)\n"
    << "    (rcnot ?l1 ?l2 - lqubit ?d - depth)\n"
    << "    (connected ?p1 ?p2 - pqubit))\n";
  functions(d, cfg);
  d << "  (:action map_initial\n"
    << "   :parameters (?l - lqubit ?p - pqubit)\n"
    << "   :precondition (and\n"
    << "      (not (mapped_lq ?l)) (not (mapped_pq ?p)))\n"
    << "   :effect (and (mapped ?l ?p)\n"
    << "      (mapped_lq ?l) (mapped_pq ?p)))\n"
    << "  (:action move_depth\n"
    << "   :parameters (?d1 ?d2 - depth)\n"
    << "   :precondition (and (current_depth ?d1)\n"
    << "      (next_depth ?d1 ?d2))\n"
    << "   :effect (and (not (current_depth ?d1))\n"
    << "      (current_depth ?d2)))\n"
    << "  (:action apply_cnot\n"
    << "   :parameters (?l1 ?l2 - lqubit\n"
    << "                ?p1 ?p2 - pqubit ?d - depth)\n"
    << "   :precondition (and (connected ?p1 ?p2)\n"
    << "      (mapped ?l1 ?p1) (mapped ?l2 ?p2)\n"
    << "      (rcnot ?l1 ?l2 ?d) (current_depth ?d))\n"
    << "   :effect (and (not (rcnot ?l1 ?l2 ?d))))\n";
  swap_actions(d, cfg, "mapped_pq");
  d << ")\n";

  std::ostringstream p;
  p << "(define (problem circuit)\n"
    << "(:domain Quantum)\n"
    << "(:objects ";
  for (std::size_t l = 0; l < circuit.num_qubits; ++l) p << lname(l) << " ";
  p << "- lqubit\n          ";
  pqubit_objects(p, graph);
  if (!layers.cnot_depths.empty()) {
    p << "\n          ";
    for (auto depth : layers.cnot_depths) p << dname(depth) << " ";
    p << "- depth";
  }
  p << ")\n(:init\n";
  cost_init(p, cfg);
  if (!layers.cnot_depths.empty()) p << "  (current_depth " << dname(layers.cnot_depths.front()) << ")\n";
  connected_facts(p, graph);
  for (std::size_t i = 0; i + 1 < layers.cnot_depths.size(); ++i)
    p << "  (next_depth " << dname(layers.cnot_depths[i]) << " " << dname(layers.cnot_depths[i + 1]) << ")\n";
  for (const auto& g : circuit.gates) {
    if (g.kind != GateKind::Cnot) continue;
    p << "  (rcnot " << lname(g.operands[0]) << " " << lname(g.operands[1]) << " " << dname(layers.depth_of.at(g.id))
      << ")\n";
  }
  p << ")\n(:goal (and\n";
  for (std::size_t l = 0; l < circuit.num_qubits; ++l) p << "  (mapped_lq " << lname(l) << ")\n";
  for (const auto& g : circuit.gates) {
    if (g.kind != GateKind::Cnot) continue;
    p << "  (not (rcnot " << lname(g.operands[0]) << " " << lname(g.operands[1]) << " "
      << dname(layers.depth_of.at(g.id)) << "))\n";
  }
  p << "))\n";
  metric(p, cfg);
  p << ")\n";
  return {d.str(), p.str()};
}

PddlPair emit_lifted(const Circuit& circuit, const DepGraph& dag, const CouplingGraph& input_graph,
                     const EncodingConfig& cfg) {
  if (cfg.model != EncodingModel::LiftedInitial && cfg.model != EncodingModel::LiftedCompact)
    throw Error("emit_lifted needs the lifted_initial or lifted_compact model");
  const CouplingGraph graph = effective_graph(input_graph, cfg);
  std::ostringstream d;
  d << "(define (domain Quantum)\n";
  requirements(d, cfg);
  d << "  (:types pqubit gate - object\n"
    << "          lqubit - gate)\n"
    << "  (:predicates\n"
    << "    (cnot ?l1 ?l2 - lqubit ?g0 ?g1 ?g2 - gate)\n"
    << "    (done ?g - gate)\n"
    << "    (mapped ?l - lqubit ?p - pqubit)\n"
    << "    (occupied ?p - pqubit)\n"
    << "    (connected ?p1 ?p2 - pqubit))\n";
  functions(d, cfg);
  if (cfg.model == EncodingModel::LiftedInitial) {
    d << "  (:action map_initial\n"
      << "   :parameters (?l - lqubit ?p - pqubit)\n"
      << "   :precondition (and\n"
      << "      (not (done ?l)) (not (occupied ?p)))\n"
      << "   :effect (and (done ?l)\n"
      << "      (mapped ?l ?p) (occupied ?p)))\n"
      << "  (:action apply_cnot\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit\n"
      << "                ?g0 ?g1 ?g2 - gate)\n"
      << "   :precondition (and\n"
      << "      (cnot ?l1 ?l2 ?g0 ?g1 ?g2)\n"
      << "      (connected ?p1 ?p2)\n"
      << "      (mapped ?l1 ?p1) (mapped ?l2 ?p2)\n"
      << "      (done ?g1) (done ?g2) (not (done ?g0)))\n"
      << "   :effect (and (done ?g0)))\n";
  } else {
    d << "  (:action apply_cnot_gate_gate\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit\n"
      << "                ?g0 ?g1 ?g2 - gate)\n"
      << "   :precondition (and\n"
      << "      (cnot ?l1 ?l2 ?g0 ?g1 ?g2)\n"
      << "      (connected ?p1 ?p2)\n"
      << "      (mapped ?l1 ?p1) (mapped ?l2 ?p2)\n"
      << "      (done ?g1) (done ?g2) (not (done ?g0)))\n"
      << "   :effect (and (done ?g0)))\n"
      << "  (:action apply_cnot_input_input\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit ?g0 - gate)\n"
      << "   :precondition (and\n"
      << "      (cnot ?l1 ?l2 ?g0 ?l1 ?l2)\n"
      << "      (connected ?p1 ?p2)\n"
      << "      (not (occupied ?p1)) (not (occupied ?p2))\n"
      << "      (not (done ?g0)))\n"
      << "   :effect (and (done ?g0)\n"
      << "      (mapped ?l1 ?p1) (occupied ?p1)\n"
      << "      (mapped ?l2 ?p2) (occupied ?p2)))\n"
      << "  (:action apply_cnot_gate_input\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit ?g0 ?g1 - gate)\n"
      << "   :precondition (and\n"
      << "      (cnot ?l1 ?l2 ?g0 ?g1 ?l2)\n"
      << "      (connected ?p1 ?p2)\n"
      << "      (mapped ?l1 ?p1) (not (occupied ?p2))\n"
      << "      (done ?g1) (not (done ?g0)))\n"
      << "   :effect (and (done ?g0)\n"
      << "      (mapped ?l2 ?p2) (occupied ?p2)))\n"
      << "  (:action apply_cnot_input_gate\n"
      << "   :parameters (?l1 ?l2 - lqubit\n"
      << "                ?p1 ?p2 - pqubit ?g0 ?g2 - gate)\n"
      << "   :precondition (and\n"
      << "      (cnot ?l1 ?l2 ?g0 ?l1 ?g2)\n"
      << "      (connected ?p1 ?p2)\n"
      << "      (not (occupied ?p1)) (mapped ?l2 ?p2)\n"
      << "      (done ?g2) (not (done ?g0)))\n"
      << "   :effect (and (done ?g0)\n"
      << "      (mapped ?l1 ?p1) (occupied ?p1)))\n";
  }
  swap_actions(d, cfg, "occupied");
  d << ")\n";

  std::ostringstream p;
  p << "(define (problem circuit)\n"
    << "(:domain Quantum)\n"
    << "(:objects ";
  for (std::size_t l = 0; l < circuit.num_qubits; ++l) p << lname(l) << " ";
  p << "- lqubit\n";
  if (!dag.empty()) {
    p << "          ";
    for (const auto& n : dag) p << gname(n.gate_id) << " ";
    p << "- gate\n";
  }
  p << "          ";
  pqubit_objects(p, graph);
  p << ")\n(:init\n";
  cost_init(p, cfg);
  for (const auto& n : dag) {
    p << "  (cnot " << lname(n.qubits[0]) << " " << lname(n.qubits[1]) << " " << gname(n.gate_id) << " "
      << pred_object(n.preds[0]) << " " << pred_object(n.preds[1]) << ")\n";
  }
  connected_facts(p, graph);
  p << ")\n(:goal (and\n";
  for (const auto& n : dag) p << "  (done " << gname(n.gate_id) << ")\n";
  p << "))\n";
  metric(p, cfg);
  p << ")\n";
  return {d.str(), p.str()};
}

PddlPair emit_local_compact(const Circuit& circuit, const DepGraph& dag, const CouplingGraph& input_graph,
                            const EncodingConfig& cfg) {
  const CouplingGraph graph = effective_graph(input_graph, cfg);
  std::ostringstream d;
  d << "(define (domain Quantum)\n";
  requirements(d, cfg);
  d << "  (:types lqubit pqubit gateid - object)\n";
  if (!dag.empty() || circuit.num_qubits > 0) {
    d << "  (:constants";
    if (!dag.empty()) {
      for (const auto& n : dag) d << " " << gname(n.gate_id);
      d << " - gateid\n             ";
    }
    for (std::size_t l = 0; l < circuit.num_qubits; ++l) d << " " << lname(l);
    d << " - lqubit)\n";
  }
  d << "  (:predicates\n"
    << "    (occupied ?p - pqubit)\n"
    << "    (mapped ?l - lqubit ?p - pqubit)\n"
    << "    (connected ?p1 ?p2 - pqubit)\n"
    << "    (done ?g - gateid))\n";
  functions(d, cfg);
  swap_actions(d, cfg, "occupied");
  for (const auto& n : dag) {
    const std::string g = gname(n.gate_id);
    d << "  (:action apply_cnot_" << g << "\n"
      << "   :parameters (?p1 ?p2 - pqubit)\n"
      << "   :precondition (and\n"
      << "      (not (done " << g << ")) (connected ?p1 ?p2)";
    std::string effect;
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string pvar = "?p" + std::to_string(i + 1);
      const std::string l = lname(n.qubits[i]);
      if (auto ref = std::get_if<GateRef>(&n.preds[i])) {
        // Both operands may wait on the same gate; emit that conjunct once.
        bool repeated = i == 1 && n.preds[0] == n.preds[1];
        d << "\n      ";
        if (!repeated) d << "(done " << gname(ref->id) << ") ";
        d << "(mapped " << l << " " << pvar << ")";
      } else {
        d << "\n      (not (occupied " << pvar << "))";
        effect += "\n      (mapped " + l + " " + pvar + ") (occupied " + pvar + ")";
      }
    }
    d << ")\n"
      << "   :effect (and (done " << g << ")" << effect << "))\n";
  }
  d << ")\n";

  std::ostringstream p;
  p << "(define (problem circuit)\n"
    << "(:domain Quantum)\n"
    << "(:objects ";
  pqubit_objects(p, graph);
  p << ")\n(:init\n";
  cost_init(p, cfg);
  connected_facts(p, graph);
  p << ")\n(:goal (and\n";
  for (const auto& n : dag) p << "  (done " << gname(n.gate_id) << ")\n";
  p << "))\n";
  metric(p, cfg);
  p << ")\n";
  return {d.str(), p.str()};
}

PddlPair encode(const Circuit& circuit, const CouplingGraph& graph, const EncodingConfig& cfg) {
  switch (cfg.model) {
    case EncodingModel::Global: return emit_global(circuit, build_layers(circuit), graph, cfg);
    case EncodingModel::LiftedInitial:
    case EncodingModel::LiftedCompact: return emit_lifted(circuit, build_depgraph(circuit), graph, cfg);
    case EncodingModel::LocalCompact: return emit_local_compact(circuit, build_depgraph(circuit), graph, cfg);
  }
  throw Error("unknown encoding model");
}

}  // namespace qlayout
