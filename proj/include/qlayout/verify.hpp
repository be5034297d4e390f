#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlayout/instance.hpp"
#include "qlayout/planner.hpp"
#include "qlayout/reconstruct.hpp"

namespace qlayout {

enum class Verdict { Pass, Fail, Skipped, Inconclusive };

const char* to_string(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::vector<std::string> issues;
};

/// Every two-qubit gate sits on a coupling edge: CNOTs in their direction,
/// swaps in either.
CheckResult check_connectivity(const MappedCircuit& mapped, const CouplingGraph& graph);

struct EquivalenceOptions {
  std::size_t max_qubits = 12;
  std::size_t exhaustive_up_to = 8;  // all basis inputs at or below this many logical qubits
  std::size_t random_inputs = 64;
  std::uint64_t seed = 20230101;
  double tolerance = 1e-7;
};

/// Exact statevector comparison of the original circuit and the mapped one
/// read through the initial and final maps, up to one global phase shared
/// by all inputs. Skipped for unknown gates or too many wires.
CheckResult check_equivalence(const Circuit& original, const MappedCircuit& mapped, const EquivalenceOptions& options = {});

/// reverse_recover followed by per-qubit sequence comparison.
CheckResult check_recovery(const Circuit& original, const MappedCircuit& mapped);

struct OptimalityResult {
  CheckResult check;
  std::optional<std::size_t> optimum;  // oracle optimum when it is at most `claimed`
  /// No plan with claimed - 1 swaps exists (vacuous for 0).
  bool lower_bound_certified = false;
};

/// Brute-force cross-check of a claimed optimal swap count. Timeouts give
/// Inconclusive.
OptimalityResult check_optimality(const RoutingInstance& instance, std::size_t claimed, OracleOptions options = {});

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;  // no check failed
  std::string to_text() const;
  std::string to_json() const;
};

VerifyReport verify_mapping(const Circuit& original, const MappedCircuit& mapped, const CouplingGraph& graph,
                            const EquivalenceOptions& options = {});

}  // namespace qlayout
