// Reference search used to cross-check solve_optimal. Written independently
// of the A* planner: explicit done flags instead of progress counters, every
// CNOT order and placement is a separate branch, and every adjacent pair is a
// swap candidate.

#include <map>
#include <string>

#include "qlayout/planner.hpp"

namespace qlayout {

namespace {

class Oracle {
 public:
  Oracle(const RoutingInstance& instance, const OracleOptions& options)
      : inst_(instance), opt_(options), start_(std::chrono::steady_clock::now()) {
    for (std::size_t i = 0; i < inst_.dag.size(); ++i) index_of_[inst_.dag[i].gate_id] = i;
  }

  std::optional<Plan> run() {
    const std::size_t n = inst_.num_logical;
    const std::size_t m = inst_.graph.num_pqubits();
    if (n > m) return std::nullopt;
    position_.assign(n, kUnmapped);
    occupant_.assign(m, kUnmapped);
    done_.assign(inst_.dag.size(), false);
    for (std::size_t bound = 0; bound <= opt_.swap_budget; ++bound) {
      trail_.clear();
      if (dfs(bound)) return Plan{trail_};
    }
    return std::nullopt;
  }

 private:
  std::string key() const {
    std::string k;
    for (auto p : position_) k.push_back(static_cast<char>(p == kUnmapped ? 0xFF : p));
    for (bool d : done_) k.push_back(d ? '1' : '0');
    return k;
  }

  bool finished() const {
    for (bool d : done_)
      if (!d) return false;
    return true;
  }

  bool deps_done(const DepNode& node) const {
    for (const auto& pred : node.preds)
      if (auto ref = std::get_if<GateRef>(&pred); ref && !done_[index_of_.at(ref->id)]) return false;
    return true;
  }

  bool dfs(std::size_t remaining) {
    if (finished()) return true;
    ++visits_;
    if (opt_.node_limit && visits_ > *opt_.node_limit) throw TimeoutError("brute-force oracle exceeded its node limit");
    if (opt_.time_limit && (visits_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *opt_.time_limit)
      throw TimeoutError("brute-force oracle exceeded its time limit");

    const std::string k = key();
    if (auto it = failed_.find(k); it != failed_.end() && it->second >= remaining) return false;

    const std::size_t m = inst_.graph.num_pqubits();

    // CNOT applications, including first-use placement of unmapped operands.
    for (std::size_t i = 0; i < inst_.dag.size(); ++i) {
      const DepNode& node = inst_.dag[i];
      if (done_[i] || !deps_done(node)) continue;
      const std::size_t c = node.qubits[0];
      const std::size_t t = node.qubits[1];
      for (std::size_t p1 = 0; p1 < m; ++p1) {
        for (std::size_t p2 = 0; p2 < m; ++p2) {
          if (!inst_.graph.has_edge(p1, p2)) continue;
          if (position_[c] != kUnmapped ? position_[c] != p1 : occupant_[p1] != kUnmapped) continue;
          if (position_[t] != kUnmapped ? position_[t] != p2 : occupant_[p2] != kUnmapped) continue;
          const std::size_t old_c = position_[c];
          const std::size_t old_t = position_[t];
          position_[c] = p1;
          occupant_[p1] = c;
          position_[t] = p2;
          occupant_[p2] = t;
          done_[i] = true;
          trail_.push_back(ApplyCnot{node.gate_id, p1, p2});
          if (dfs(remaining)) return true;
          trail_.pop_back();
          done_[i] = false;
          if (old_c == kUnmapped) occupant_[p1] = kUnmapped;
          if (old_t == kUnmapped) occupant_[p2] = kUnmapped;
          position_[c] = old_c;
          position_[t] = old_t;
        }
      }
    }

    if (remaining > 0) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (!inst_.graph.adjacent(a, b)) continue;
          const std::size_t la = occupant_[a];
          const std::size_t lb = occupant_[b];
          if (la != kUnmapped && lb != kUnmapped) {
            exchange(a, b);
            trail_.push_back(Swap{la, lb, a, b});
            if (dfs(remaining - 1)) return true;
            trail_.pop_back();
            exchange(a, b);
          } else if (opt_.ancillary && (la != kUnmapped || lb != kUnmapped)) {
            const std::size_t from = la != kUnmapped ? a : b;
            const std::size_t to = la != kUnmapped ? b : a;
            const std::size_t who = occupant_[from];
            exchange(a, b);
            trail_.push_back(SwapAncilla{who, from, to});
            if (dfs(remaining - 1)) return true;
            trail_.pop_back();
            exchange(a, b);
          }
        }
      }
    }

    failed_[k] = remaining;
    return false;
  }

  void exchange(std::size_t a, std::size_t b) {
    std::swap(occupant_[a], occupant_[b]);
    if (occupant_[a] != kUnmapped) position_[occupant_[a]] = a;
    if (occupant_[b] != kUnmapped) position_[occupant_[b]] = b;
  }

  const RoutingInstance& inst_;
  const OracleOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  std::map<std::size_t, std::size_t> index_of_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> occupant_;
  std::vector<bool> done_;
  std::vector<PlanAction> trail_;
  std::map<std::string, std::size_t> failed_;
  std::size_t visits_ = 0;
};

}  // namespace

std::optional<Plan> brute_force_oracle(const RoutingInstance& instance, const OracleOptions& options) {
  return Oracle(instance, options).run();
}

}  // namespace qlayout
