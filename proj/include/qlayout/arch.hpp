#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlayout/error.hpp"

namespace qlayout {

using Edge = std::pair<std::size_t, std::size_t>;

/// Directed connectivity between physical qubits. CNOT legality follows edge
/// direction; swap legality only needs adjacency in either direction.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  /// Throws CouplingError on self-loops or endpoints >= num_pqubits.
  CouplingGraph(std::size_t num_pqubits, const std::vector<Edge>& edges, std::string name = "custom");

  std::size_t num_pqubits() const { return num_pqubits_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool has_edge(std::size_t from, std::size_t to) const { return edges_.count({from, to}) != 0; }
  bool adjacent(std::size_t a, std::size_t b) const { return has_edge(a, b) || has_edge(b, a); }
  /// Undirected neighbours, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t p) const { return neighbors_[p]; }
  /// Undirected edges {a, b} with a < b, ascending.
  const std::vector<Edge>& undirected_edges() const { return undirected_; }

  bool is_symmetric() const;
  bool is_connected() const;

  bool operator==(const CouplingGraph& other) const {
    return num_pqubits_ == other.num_pqubits_ && edges_ == other.edges_;
  }

 private:
  std::size_t num_pqubits_ = 0;
  std::set<Edge> edges_;
  std::string name_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<Edge> undirected_;
};

/// `tenerife` (IBM QX2, 5 qubits) or `melbourne` (14 qubits).
CouplingGraph preset(std::string_view name);

/// First non-comment line is the qubit count, then one `a b` directed edge
/// per line. `#` starts a comment. Duplicate edges collapse.
CouplingGraph load_coupling(std::string_view text, std::string name = "custom");
std::string dump_coupling(const CouplingGraph& graph);

CouplingGraph bidirectionalize(const CouplingGraph& graph);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop counts over the undirected graph; kUnreachable when disconnected.
std::vector<std::vector<int>> all_pairs_distance(const CouplingGraph& graph);

}  // namespace qlayout
