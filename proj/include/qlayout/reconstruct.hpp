#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/arch.hpp"
#include "qlayout/planner.hpp"
#include "qlayout/qasm.hpp"

namespace qlayout {

enum class SwapStyle { SwapGate, ThreeCnot };

SwapStyle parse_swap_style(std::string_view name);

/// Where one routing swap landed in the mapped circuit. `gate_index` is the
/// position of its first emitted gate; `gate_count` is 1 for a `swap`
/// statement and 3 or 7 for a decomposition.
struct SwapRecord {
  std::size_t gate_index;
  std::size_t gate_count;
  std::size_t p1, p2;
  bool operator==(const SwapRecord&) const = default;
};

struct MappedCircuit {
  Circuit circuit;                      // over the physical register
  std::vector<std::size_t> initial_map;  // logical -> physical
  std::vector<std::size_t> final_map;
  std::vector<SwapRecord> swaps;
  std::size_t swap_count() const { return swaps.size(); }
};

/// Rebuilds the full circuit from a plan, reinserting unary gates next to
/// their neighbours in program order. Throws Error on a plan that does not
/// cover the circuit's CNOTs.
MappedCircuit reconstruct(const Circuit& original, const Plan& plan, const CouplingGraph& graph,
                          SwapStyle style = SwapStyle::SwapGate);

/// Undoes the routing: drops the swaps and maps every wire back to its
/// logical qubit. Throws RecoveryError when a gate cannot be attributed.
Circuit reverse_recover(const MappedCircuit& mapped, std::size_t num_logical);

/// Empty when each logical qubit sees the same gate sequence in both
/// circuits and every two-qubit gate pairs the same operands. Otherwise
/// describes the first divergence.
std::string first_divergence(const Circuit& expected, const Circuit& actual);

/// OPENQASM text with `// initial:` and `// final:` comment lines.
std::string write_mapped_qasm(const MappedCircuit& mapped);

/// Initial map, final map, swap list and swap count.
std::string mapping_report(const MappedCircuit& mapped);

}  // namespace qlayout
