#pragma once

#include <string>
#include <string_view>

#include "qlayout/arch.hpp"
#include "qlayout/depgraph.hpp"
#include "qlayout/qasm.hpp"

namespace qlayout {

enum class EncodingModel {
  Global,         // layer-synchronised, explicit map_initial / move_depth
  LiftedInitial,  // local dependencies, explicit map_initial
  LiftedCompact,  // local dependencies, mapping folded into four apply_cnot cases
  LocalCompact,   // one grounded apply_cnot_g<id> action per CNOT
};

std::string_view to_string(EncodingModel model);
/// Accepts global, lifted_initial, lifted_compact, local (alias local_compact).
EncodingModel parse_encoding_model(std::string_view name);

struct EncodingConfig {
  EncodingModel model = EncodingModel::LocalCompact;
  bool ancillary_swaps = true;
  bool bidirectional = true;
  /// Values other than 1 switch on :action-costs with swaps costing this much.
  unsigned swap_cost = 1;
};

struct PddlPair {
  std::string domain_text;
  std::string problem_text;
};

/// Object names used by every encoding: l<i>, p<j>, g<gate id>, d<layer>.
std::string lname(std::size_t l);
std::string pname(std::size_t p);
std::string gname(std::size_t id);
std::string dname(std::size_t layer);

PddlPair emit_global(const Circuit& circuit, const LayerSchedule& layers, const CouplingGraph& graph,
                     const EncodingConfig& cfg);
/// cfg.model selects LiftedInitial or LiftedCompact.
PddlPair emit_lifted(const Circuit& circuit, const DepGraph& dag, const CouplingGraph& graph,
                     const EncodingConfig& cfg);
PddlPair emit_local_compact(const Circuit& circuit, const DepGraph& dag, const CouplingGraph& graph,
                            const EncodingConfig& cfg);

/// Dispatches on cfg.model.
PddlPair encode(const Circuit& circuit, const CouplingGraph& graph, const EncodingConfig& cfg);

}  // namespace qlayout
