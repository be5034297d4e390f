#include "qlayout/arch.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qlayout {

CouplingGraph::CouplingGraph(std::size_t num_pqubits, const std::vector<Edge>& edges, std::string name)
    : num_pqubits_(num_pqubits), name_(std::move(name)), neighbors_(num_pqubits) {
  for (const auto& [a, b] : edges) {
    if (a >= num_pqubits || b >= num_pqubits)
      throw CouplingError("edge " + std::to_string(a) + " " + std::to_string(b) + " has an endpoint >= " +
                          std::to_string(num_pqubits));
    if (a == b) throw CouplingError("self-loop on physical qubit " + std::to_string(a));
    edges_.insert({a, b});
  }
  std::set<Edge> undirected;
  for (const auto& [a, b] : edges_) undirected.insert({std::min(a, b), std::max(a, b)});
  undirected_.assign(undirected.begin(), undirected.end());
  for (const auto& [a, b] : undirected_) {
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

bool CouplingGraph::is_symmetric() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return has_edge(e.second, e.first); });
}

bool CouplingGraph::is_connected() const {
  if (num_pqubits_ <= 1) return true;
  const auto dist = all_pairs_distance(*this);
  return std::none_of(dist[0].begin(), dist[0].end(), [](int d) { return d == kUnreachable; });
}

CouplingGraph preset(std::string_view name) {
  if (name == "tenerife") {
    // IBM QX2 with both directions of each coupling.
    return CouplingGraph(5,
                         {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2},
                          {3, 2}, {2, 3}, {3, 4}, {4, 3}, {4, 2}, {2, 4}},
                         "tenerife");
  }
  if (name == "melbourne") {
    // 2x7 ladder with the hardware's native CNOT directions.
    return CouplingGraph(14,
                         {{1, 0}, {1, 2}, {2, 3}, {4, 3}, {4, 10}, {5, 4}, {5, 6}, {5, 9}, {6, 8},
                          {7, 8}, {9, 8}, {9, 10}, {11, 3}, {11, 10}, {11, 12}, {12, 2}, {13, 1}, {13, 12}},
                         "melbourne");
  }
  throw CouplingError("unknown platform '" + std::string(name) + "' (expected tenerife or melbourne)");
}

CouplingGraph load_coupling(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_count = false;
  std::size_t count = 0;
  std::vector<Edge> edges;
  auto malformed = [&](const std::string& why) {
    return CouplingError("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    std::vector<std::size_t> values;
    for (const auto& t : tokens) {
      if (!std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw malformed("expected non-negative integers, got '" + t + "'");
      values.push_back(std::stoul(t));
    }
    if (!have_count) {
      if (values.size() != 1) throw malformed("expected the number of physical qubits");
      count = values[0];
      have_count = true;
      continue;
    }
    if (values.size() != 2) throw malformed("expected an edge 'a b'");
    if (values[0] >= count || values[1] >= count)
      throw malformed("edge endpoint out of range (" + std::to_string(count) + " qubits)");
    if (values[0] == values[1]) throw malformed("self-loop on physical qubit " + std::to_string(values[0]));
    edges.emplace_back(values[0], values[1]);
  }
  if (!have_count) throw CouplingError("empty coupling file");
  return CouplingGraph(count, edges, std::move(name));
}

std::string dump_coupling(const CouplingGraph& graph) {
  std::ostringstream out;
  out << "# " << graph.name() << "\n" << graph.num_pqubits() << "\n";
  for (const auto& [a, b] : graph.edges()) out << a << " " << b << "\n";
  return out.str();
}

CouplingGraph bidirectionalize(const CouplingGraph& graph) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : graph.edges()) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return CouplingGraph(graph.num_pqubits(), edges, graph.name());
}

std::vector<std::vector<int>> all_pairs_distance(const CouplingGraph& graph) {
  const std::size_t m = graph.num_pqubits();
  std::vector<std::vector<int>> dist(m, std::vector<int>(m, kUnreachable));
  for (std::size_t src = 0; src < m; ++src) {
    std::deque<std::size_t> queue{src};
    dist[src][src] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : graph.neighbors(u)) {
        if (dist[src][v] != kUnreachable) continue;
        dist[src][v] = dist[src][u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace qlayout
