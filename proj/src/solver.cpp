// A* over (placement, per-qubit progress) with swap count as the path cost.
//
// A logical qubit's CNOTs form a chain, and the set of applied CNOTs is
// closed under dependencies, so the number of applied CNOTs on each qubit
// identifies the done set exactly. The search key is therefore
// `position[0..n) ++ progress[0..n)`, one byte each.
//
// Every generated state is saturated: ready CNOTs whose operands already sit
// on a coupling edge in the right direction are applied at no cost. Applying
// such a CNOT never removes an option, so this loses no optimal plan.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

#include "qlayout/planner.hpp"

namespace qlayout {

namespace {

constexpr std::uint8_t kFree = 0xFF;

enum class StepKind : std::uint8_t { Root, Place, SwapPair, SwapFree };

struct Step {
  StepKind kind = StepKind::Root;
  std::uint32_t cnot = 0;  // Place only
  std::uint8_t a = 0;      // Place: control qubit; swaps: first endpoint / source
  std::uint8_t b = 0;      // Place: target qubit; swaps: second endpoint / destination
};

struct Node {
  std::uint32_t parent;
  std::uint32_t g;
  Step step;
  bool closed = false;
};

class Search {
 public:
  Search(const RoutingInstance& instance, const SolveOptions& options)
      : inst_(instance), opt_(options), n_(instance.num_logical), m_(instance.graph.num_pqubits()) {
    if (m_ >= kFree) throw Error("internal planner supports at most 254 physical qubits");
    const auto& dag = inst_.dag;
    chain_.resize(n_);
    control_.resize(dag.size());
    target_.resize(dag.size());
    pos_in_chain_.resize(dag.size());
    for (std::size_t i = 0; i < dag.size(); ++i) {
      control_[i] = dag[i].qubits[0];
      target_[i] = dag[i].qubits[1];
      pos_in_chain_[i] = {chain_[control_[i]].size(), chain_[target_[i]].size()};
      chain_[control_[i]].push_back(i);
      chain_[target_[i]].push_back(i);
    }
    for (const auto& c : chain_)
      if (c.size() >= kFree) throw Error("internal planner supports at most 254 CNOTs per qubit");
    edge_.assign(m_ * m_, false);
    for (const auto& [a, b] : inst_.graph.edges()) edge_[a * m_ + b] = true;
    dist_ = all_pairs_distance(inst_.graph);
  }

  Plan run(SolveStats* stats) {
    if (n_ > m_)
      throw InfeasibleError(std::to_string(n_) + " logical qubits do not fit on " + std::to_string(m_) +
                            " physical qubits");
    const auto start_time = std::chrono::steady_clock::now();

    std::string root(2 * n_, '\0');
    for (std::size_t l = 0; l < n_; ++l) root[l] = static_cast<char>(kFree);
    saturate(root, nullptr);
    intern(root, Node{0, 0, Step{}});

    using Entry = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, std::uint32_t>;  // f, h, seq, id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::uint64_t seq = 0;
    open.emplace(heuristic(root), heuristic(root), seq++, 0);

    std::vector<std::uint8_t> occ(m_);
    std::size_t expanded = 0;
    std::size_t generated = 0;

    while (!open.empty()) {
      auto [f, h, s, id] = open.top();
      open.pop();
      Node& node = nodes_[id];
      if (node.closed || node.g + h != f) continue;
      node.closed = true;
      const std::string key = keys_[id];
      if (is_goal(key)) {
        if (stats) *stats = {expanded, generated};
        return extract(id);
      }
      ++expanded;
      if (opt_.time_limit && (expanded & 0x3FF) == 0 &&
          std::chrono::steady_clock::now() - start_time > *opt_.time_limit)
        throw TimeoutError("internal planner exceeded its time limit");

      const std::uint32_t g = node.g;
      std::fill(occ.begin(), occ.end(), kFree);
      for (std::size_t l = 0; l < n_; ++l)
        if (pos(key, l) != kFree) occ[pos(key, l)] = static_cast<std::uint8_t>(l);

      auto push = [&](std::string&& child, std::uint32_t cost, Step step) {
        saturate(child, nullptr);
        ++generated;
        const std::uint32_t cg = g + cost;
        auto it = index_.find(child);
        std::uint32_t cid;
        if (it == index_.end()) {
          cid = intern(child, Node{id, cg, step});
        } else {
          cid = it->second;
          Node& other = nodes_[cid];
          if (other.closed || other.g <= cg) return;
          other.g = cg;
          other.parent = id;
          other.step = step;
        }
        const std::uint32_t ch = heuristic(keys_[cid]);
        open.emplace(cg + ch, ch, seq++, cid);
      };

      // Place the unmapped operands of ready CNOTs (gate order, then edge order).
      for (std::size_t i = 0; i < inst_.dag.size(); ++i) {
        if (!ready(key, i)) continue;
        const std::uint8_t pc = pos(key, control_[i]);
        const std::uint8_t pt = pos(key, target_[i]);
        if (pc != kFree && pt != kFree) continue;
        for (const auto& [a, b] : inst_.graph.edges()) {
          if (pc != kFree ? a != pc : occ[a] != kFree) continue;
          if (pt != kFree ? b != pt : occ[b] != kFree) continue;
          std::string child = key;
          set_pos(child, control_[i], static_cast<std::uint8_t>(a));
          set_pos(child, target_[i], static_cast<std::uint8_t>(b));
          advance(child, i);
          push(std::move(child), 0,
               Step{StepKind::Place, static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(a),
                    static_cast<std::uint8_t>(b)});
        }
      }

      // Pair swaps need pending work on one side; ancilla moves are always useful.
      for (const auto& [a, b] : inst_.graph.undirected_edges()) {
        const std::uint8_t oa = occ[a];
        const std::uint8_t ob = occ[b];
        if (oa != kFree && ob != kFree) {
          if (!pending(key, oa) && !pending(key, ob)) continue;
          std::string child = key;
          set_pos(child, oa, static_cast<std::uint8_t>(b));
          set_pos(child, ob, static_cast<std::uint8_t>(a));
          push(std::move(child), 1,
               Step{StepKind::SwapPair, 0, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
        } else if (opt_.ancillary && (oa != kFree) != (ob != kFree)) {
          const std::size_t from = oa != kFree ? a : b;
          const std::size_t to = oa != kFree ? b : a;
          // Finished qubits may still need to vacate a slot.
          const std::uint8_t who = occ[from];
          std::string child = key;
          set_pos(child, who, static_cast<std::uint8_t>(to));
          push(std::move(child), 1,
               Step{StepKind::SwapFree, 0, static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(to)});
        }
      }
    }
    throw InfeasibleError("no placement and swap sequence executes every CNOT on platform " + inst_.graph.name());
  }

 private:
  std::uint8_t pos(const std::string& k, std::size_t l) const { return static_cast<std::uint8_t>(k[l]); }
  void set_pos(std::string& k, std::size_t l, std::uint8_t p) const { k[l] = static_cast<char>(p); }
  std::size_t progress(const std::string& k, std::size_t l) const { return static_cast<std::uint8_t>(k[n_ + l]); }
  bool pending(const std::string& k, std::size_t l) const { return progress(k, l) < chain_[l].size(); }

  bool ready(const std::string& k, std::size_t i) const {
    return progress(k, control_[i]) == pos_in_chain_[i].first && progress(k, target_[i]) == pos_in_chain_[i].second;
  }

  void advance(std::string& k, std::size_t i) const {
    ++k[n_ + control_[i]];
    ++k[n_ + target_[i]];
  }

  bool is_goal(const std::string& k) const {
    for (std::size_t l = 0; l < n_; ++l)
      if (pending(k, l)) return false;
    return true;
  }

  // The next CNOT of qubit l, if l is its control and it is ready.
  std::optional<std::size_t> ready_from_control(const std::string& k, std::size_t l) const {
    if (!pending(k, l)) return std::nullopt;
    std::size_t i = chain_[l][progress(k, l)];
    if (control_[i] != l || !ready(k, i)) return std::nullopt;
    return i;
  }

  void saturate(std::string& k, std::vector<PlanAction>* log) const {
    std::vector<std::size_t> batch;
    for (;;) {
      batch.clear();
      for (std::size_t l = 0; l < n_; ++l) {
        auto i = ready_from_control(k, l);
        if (!i) continue;
        std::uint8_t pc = pos(k, l);
        std::uint8_t pt = pos(k, target_[*i]);
        if (pc == kFree || pt == kFree || !edge_[pc * m_ + pt]) continue;
        batch.push_back(*i);
      }
      if (batch.empty()) return;
      // Ready CNOTs act on disjoint qubits, so the batch commutes.
      std::sort(batch.begin(), batch.end());
      for (std::size_t i : batch) {
        if (log) log->push_back(ApplyCnot{inst_.dag[i].gate_id, pos(k, control_[i]), pos(k, target_[i])});
        advance(k, i);
      }
    }
  }

  std::uint32_t heuristic(const std::string& k) const {
    if (opt_.heuristic == Heuristic::None) return 0;
    int best = 0;
    for (std::size_t l = 0; l < n_; ++l) {
      auto i = ready_from_control(k, l);
      if (!i) continue;
      std::uint8_t pc = pos(k, l);
      std::uint8_t pt = pos(k, target_[*i]);
      if (pc == kFree || pt == kFree) continue;
      int d = dist_[pc][pt];
      if (d == kUnreachable) continue;  // never resolvable; let the search exhaust
      best = std::max(best, d - 1);
    }
    return static_cast<std::uint32_t>(best);
  }

  std::uint32_t intern(const std::string& key, Node node) {
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(node);
    keys_.push_back(key);
    index_.emplace(key, id);
    return id;
  }

  Plan extract(std::uint32_t goal) const {
    std::vector<Step> steps;
    for (std::uint32_t id = goal; id != 0; id = nodes_[id].parent) steps.push_back(nodes_[id].step);
    std::reverse(steps.begin(), steps.end());

    Plan plan;
    std::string k(2 * n_, '\0');
    for (std::size_t l = 0; l < n_; ++l) k[l] = static_cast<char>(kFree);
    saturate(k, &plan.actions);
    auto occupant = [&](std::size_t p) -> std::uint8_t {
      for (std::size_t l = 0; l < n_; ++l)
        if (pos(k, l) == p) return static_cast<std::uint8_t>(l);
      return kFree;
    };
    for (const Step& s : steps) {
      switch (s.kind) {
        case StepKind::Place:
          plan.actions.push_back(ApplyCnot{inst_.dag[s.cnot].gate_id, s.a, s.b});
          set_pos(k, control_[s.cnot], s.a);
          set_pos(k, target_[s.cnot], s.b);
          advance(k, s.cnot);
          break;
        case StepKind::SwapPair: {
          std::uint8_t oa = occupant(s.a);
          std::uint8_t ob = occupant(s.b);
          plan.actions.push_back(Swap{oa, ob, s.a, s.b});
          set_pos(k, oa, s.b);
          set_pos(k, ob, s.a);
          break;
        }
        case StepKind::SwapFree: {
          std::uint8_t who = occupant(s.a);
          plan.actions.push_back(SwapAncilla{who, s.a, s.b});
          set_pos(k, who, s.b);
          break;
        }
        case StepKind::Root: break;
      }
      saturate(k, &plan.actions);
    }
    return plan;
  }

  const RoutingInstance& inst_;
  const SolveOptions& opt_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> chain_;
  std::vector<std::size_t> control_, target_;
  std::vector<std::pair<std::size_t, std::size_t>> pos_in_chain_;
  std::vector<bool> edge_;
  std::vector<std::vector<int>> dist_;

  std::vector<Node> nodes_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace

Plan solve_optimal(const RoutingInstance& instance, const SolveOptions& options, SolveStats* stats) {
  return Search(instance, options).run(stats);
}

}  // namespace qlayout
