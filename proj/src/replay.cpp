#include <algorithm>
#include <sstream>

#include "qlayout/planner.hpp"

namespace qlayout {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string p(std::size_t q) { return "p" + std::to_string(q); }
std::string l(std::size_t q) { return "l" + std::to_string(q); }

}  // namespace

std::string describe(const PlanAction& action) {
  return std::visit(Overloaded{
                        [](const ApplyCnot& a) { return "apply_cnot g" + std::to_string(a.gate_id) + " " + p(a.p1) + " " + p(a.p2); },
                        [](const Swap& a) { return "swap " + l(a.l1) + " " + l(a.l2) + " " + p(a.p1) + " " + p(a.p2); },
                        [](const SwapAncilla& a) { return "swap-ancilla " + l(a.l) + " " + p(a.from) + " -> " + p(a.to); },
                        [](const MapInitial& a) { return "map_initial " + l(a.l) + " " + p(a.p); },
                        [](const MoveDepth& a) { return "move_depth d" + std::to_string(a.from) + " d" + std::to_string(a.to); },
                    },
                    action);
}

std::size_t Plan::swap_count() const {
  return static_cast<std::size_t>(std::count_if(actions.begin(), actions.end(), is_swap));
}

bool SearchState::all_done() const { return std::all_of(done.begin(), done.end(), [](bool b) { return b; }); }

SearchState replay(const Plan& plan, const RoutingInstance& instance, const ReplayOptions& options) {
  const std::size_t n = instance.num_logical;
  const std::size_t m = instance.graph.num_pqubits();
  const bool global = options.semantics == Semantics::Global;

  SearchState state;
  state.position.assign(n, kUnmapped);
  state.occupant.assign(m, kUnmapped);
  state.done.assign(instance.dag.size(), false);
  if (global && !instance.layers.cnot_depths.empty()) state.current_depth = instance.layers.cnot_depths.front();

  auto index_of = [&](std::size_t gate_id) -> std::optional<std::size_t> {
    const DepNode* node = instance.node(gate_id);
    if (!node) return std::nullopt;
    return static_cast<std::size_t>(node - instance.dag.data());
  };

  for (std::size_t step = 0; step < plan.actions.size(); ++step) {
    const PlanAction& action = plan.actions[step];
    auto fail = [&](const std::string& why) { throw ReplayError(step, describe(action) + ": " + why); };
    auto check_logical = [&](std::size_t q) {
      if (q >= n) fail(l(q) + " is not a logical qubit of the circuit");
    };
    auto check_physical = [&](std::size_t q) {
      if (q >= m) fail(p(q) + " is not a physical qubit of the platform");
    };

    std::visit(
        Overloaded{
            [&](const ApplyCnot& a) {
              check_physical(a.p1);
              check_physical(a.p2);
              auto idx = index_of(a.gate_id);
              if (!idx) fail("g" + std::to_string(a.gate_id) + " is not a CNOT of the circuit");
              const DepNode& node = instance.dag[*idx];
              if (state.done[*idx]) fail("gate already applied");
              for (const auto& pred : node.preds) {
                if (auto ref = std::get_if<GateRef>(&pred)) {
                  auto pi = index_of(ref->id);
                  if (!state.done[*pi]) fail("unmet precondition (done g" + std::to_string(ref->id) + ")");
                }
              }
              if (global) {
                std::size_t layer = instance.layers.depth_of.at(a.gate_id);
                if (state.current_depth != layer)
                  fail("gate belongs to depth d" + std::to_string(layer) + " but current depth is d" +
                       (state.current_depth ? std::to_string(*state.current_depth) : std::string("-")));
              }
              const std::size_t targets[2] = {a.p1, a.p2};
              if (a.p1 == a.p2) fail("operands on the same physical qubit");
              for (std::size_t i = 0; i < 2; ++i) {
                std::size_t q = node.qubits[i];
                std::size_t at = state.position[q];
                if (at == kUnmapped) {
                  if (global) fail(l(q) + " is not mapped");
                  if (state.occupant[targets[i]] != kUnmapped)
                    fail("cannot map " + l(q) + " onto occupied " + p(targets[i]));
                } else if (at != targets[i]) {
                  fail(l(q) + " is on " + p(at) + ", not " + p(targets[i]));
                }
              }
              if (!instance.graph.has_edge(a.p1, a.p2)) fail("no coupling " + p(a.p1) + " -> " + p(a.p2));
              for (std::size_t i = 0; i < 2; ++i) {
                state.position[node.qubits[i]] = targets[i];
                state.occupant[targets[i]] = node.qubits[i];
              }
              state.done[*idx] = true;
            },
            [&](const Swap& a) {
              check_logical(a.l1);
              check_logical(a.l2);
              check_physical(a.p1);
              check_physical(a.p2);
              if (state.position[a.l1] != a.p1) fail(l(a.l1) + " is not on " + p(a.p1));
              if (state.position[a.l2] != a.p2) fail(l(a.l2) + " is not on " + p(a.p2));
              if (!instance.graph.adjacent(a.p1, a.p2)) fail(p(a.p1) + " and " + p(a.p2) + " are not connected");
              state.position[a.l1] = a.p2;
              state.position[a.l2] = a.p1;
              state.occupant[a.p1] = a.l2;
              state.occupant[a.p2] = a.l1;
              ++state.swaps_used;
            },
            [&](const SwapAncilla& a) {
              check_logical(a.l);
              check_physical(a.from);
              check_physical(a.to);
              if (state.position[a.l] != a.from) fail(l(a.l) + " is not on " + p(a.from));
              if (state.occupant[a.to] != kUnmapped) fail(p(a.to) + " is occupied");
              if (!instance.graph.adjacent(a.from, a.to)) fail(p(a.from) + " and " + p(a.to) + " are not connected");
              state.position[a.l] = a.to;
              state.occupant[a.from] = kUnmapped;
              state.occupant[a.to] = a.l;
              ++state.swaps_used;
            },
            [&](const MapInitial& a) {
              check_logical(a.l);
              check_physical(a.p);
              if (state.position[a.l] != kUnmapped) fail(l(a.l) + " is already mapped");
              if (state.occupant[a.p] != kUnmapped) fail(p(a.p) + " is occupied");
              state.position[a.l] = a.p;
              state.occupant[a.p] = a.l;
            },
            [&](const MoveDepth& a) {
              if (!global) fail("move_depth is only valid under layered semantics");
              const auto& depths = instance.layers.cnot_depths;
              if (state.current_depth != a.from)
                fail("current depth is not d" + std::to_string(a.from));
              auto it = std::find(depths.begin(), depths.end(), a.from);
              if (it == depths.end() || it + 1 == depths.end() || *(it + 1) != a.to)
                fail("d" + std::to_string(a.to) + " does not follow d" + std::to_string(a.from));
              state.current_depth = a.to;
            },
        },
        action);
  }

  if (options.require_complete) {
    for (std::size_t i = 0; i < instance.dag.size(); ++i) {
      if (!state.done[i])
        throw ReplayError(plan.actions.size(),
                          "plan ends before the goal: unmet (done g" + std::to_string(instance.dag[i].gate_id) + ")");
    }
    if (global) {
      for (std::size_t q = 0; q < n; ++q)
        if (state.position[q] == kUnmapped)
          throw ReplayError(plan.actions.size(), "plan ends before the goal: unmet (mapped_lq " + l(q) + ")");
    }
  }
  return state;
}

}  // namespace qlayout
