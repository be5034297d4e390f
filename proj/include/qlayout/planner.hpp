#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlayout/instance.hpp"

namespace qlayout {

/// CNOT `gate_id` on physical (control, target). Under local semantics an
/// operand whose dependency is its input wire is mapped by this action.
struct ApplyCnot {
  std::size_t gate_id;
  std::size_t p1, p2;
  bool operator==(const ApplyCnot&) const = default;
};

/// Exchange two mapped logical qubits sitting on adjacent physical qubits.
struct Swap {
  std::size_t l1, l2;
  std::size_t p1, p2;
  bool operator==(const Swap&) const = default;
};

/// Move a mapped logical qubit onto an adjacent free physical qubit.
struct SwapAncilla {
  std::size_t l;
  std::size_t from, to;
  bool operator==(const SwapAncilla&) const = default;
};

struct MapInitial {
  std::size_t l, p;
  bool operator==(const MapInitial&) const = default;
};

struct MoveDepth {
  std::size_t from, to;
  bool operator==(const MoveDepth&) const = default;
};

using PlanAction = std::variant<ApplyCnot, Swap, SwapAncilla, MapInitial, MoveDepth>;

inline bool is_swap(const PlanAction& a) {
  return std::holds_alternative<Swap>(a) || std::holds_alternative<SwapAncilla>(a);
}

std::string describe(const PlanAction& action);

struct Plan {
  std::vector<PlanAction> actions;

  std::size_t swap_count() const;
  bool operator==(const Plan&) const = default;
};

inline constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

/// Partial placement plus progress after replaying a plan prefix.
struct SearchState {
  std::vector<std::size_t> position;  // logical -> physical or kUnmapped
  std::vector<std::size_t> occupant;  // physical -> logical or kUnmapped
  std::vector<bool> done;             // indexed like RoutingInstance::dag
  std::size_t swaps_used = 0;
  std::optional<std::size_t> current_depth;  // layered semantics only

  bool all_done() const;
};

enum class Semantics {
  Local,   // dependencies between CNOTs; mapping integrated or via map_initial
  Global,  // layer-synchronised: CNOTs only at their layer, move_depth advances
};

struct ReplayOptions {
  Semantics semantics = Semantics::Local;
  /// Also fail when the plan ends before every CNOT is done.
  bool require_complete = true;
};

/// Checks every action's preconditions in order. Throws ReplayError naming
/// the first failing step.
SearchState replay(const Plan& plan, const RoutingInstance& instance, const ReplayOptions& options = {});

enum class Heuristic { None, MaxDistance };

struct SolveOptions {
  bool ancillary = true;
  Heuristic heuristic = Heuristic::MaxDistance;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SolveStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
};

/// A plan with the minimum number of swaps under local semantics with the
/// initial mapping folded into each qubit's first CNOT. Deterministic.
/// Throws InfeasibleError or TimeoutError.
Plan solve_optimal(const RoutingInstance& instance, const SolveOptions& options = {}, SolveStats* stats = nullptr);

struct OracleOptions {
  bool ancillary = true;
  std::size_t swap_budget = 8;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Deterministic alternative to the time limit: search-node budget.
  std::optional<std::size_t> node_limit;
};

/// Exhaustive iterative deepening on the swap count, no heuristic and no
/// pruning beyond repeated states. Returns the first plan found (hence
/// optimal) or nullopt when none exists within the budget. Throws
/// TimeoutError.
std::optional<Plan> brute_force_oracle(const RoutingInstance& instance, const OracleOptions& options = {});

}  // namespace qlayout
