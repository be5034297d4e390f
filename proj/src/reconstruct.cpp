#include "qlayout/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qlayout {

SwapStyle parse_swap_style(std::string_view name) {
  if (name == "swap" || name == "swap_gate") return SwapStyle::SwapGate;
  if (name == "cnot" || name == "three_cnot" || name == "3cnot") return SwapStyle::ThreeCnot;
  throw Error("unknown swap style '" + std::string(name) + "' (expected swap or three_cnot)");
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Physical slots exchanged by a relocation action, if any.
std::optional<Edge> exchanged_slots(const PlanAction& action) {
  if (auto s = std::get_if<Swap>(&action)) return Edge{s->p1, s->p2};
  if (auto s = std::get_if<SwapAncilla>(&action)) return Edge{s->from, s->to};
  return std::nullopt;
}

// Time-zero placement. A logical first placed on p at some step started on
// whichever slot the earlier swaps carried to p.
std::vector<std::size_t> initial_placement(const Circuit& original, const Plan& plan, const CouplingGraph& graph) {
  const std::size_t n = original.num_qubits;
  const std::size_t m = graph.num_pqubits();
  if (n > m) throw InfeasibleError("circuit needs " + std::to_string(n) + " qubits, platform has " + std::to_string(m));
  std::map<std::size_t, const Gate*> cnots;
  for (const auto& g : original.gates)
    if (g.kind == GateKind::Cnot) cnots[g.id] = &g;

  std::vector<std::size_t> origin(m);
  for (std::size_t p = 0; p < m; ++p) origin[p] = p;
  std::vector<std::size_t> initial(n, kUnmapped);
  std::vector<bool> taken(m, false);
  auto place = [&](std::size_t l, std::size_t p) {
    if (l >= n || p >= m) throw Error("plan refers to l" + std::to_string(l) + " or p" + std::to_string(p) + " outside the instance");
    if (initial[l] != kUnmapped) return;
    initial[l] = origin[p];
    taken[origin[p]] = true;
  };
  for (const auto& action : plan.actions) {
    if (auto c = std::get_if<ApplyCnot>(&action)) {
      auto it = cnots.find(c->gate_id);
      if (it == cnots.end()) throw Error("plan applies g" + std::to_string(c->gate_id) + ", which is not a CNOT of the circuit");
      place(it->second->operands[0], c->p1);
      place(it->second->operands[1], c->p2);
    } else if (auto mi = std::get_if<MapInitial>(&action)) {
      place(mi->l, mi->p);
    } else if (auto e = exchanged_slots(action)) {
      if (e->first >= m || e->second >= m) throw Error("plan swaps a qubit outside the platform");
      std::swap(origin[e->first], origin[e->second]);
    }
  }
  std::size_t next_free = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (initial[l] != kUnmapped) continue;
    while (taken[next_free]) ++next_free;
    initial[l] = next_free;
    taken[next_free] = true;
  }
  return initial;
}

class Emitter {
 public:
  Emitter(const Circuit& original, const CouplingGraph& graph, SwapStyle style, std::vector<std::size_t> initial)
      : orig_(original), graph_(graph), style_(style), position_(std::move(initial)) {
    occupant_.assign(graph.num_pqubits(), kUnmapped);
    for (std::size_t l = 0; l < position_.size(); ++l) occupant_[position_[l]] = l;
    queues_.resize(original.num_qubits);
    for (std::size_t i = 0; i < original.gates.size(); ++i)
      for (auto q : original.gates[i].operands) queues_[q].push_back(i);
    head_.assign(original.num_qubits, 0);
    out_.num_qubits = graph.num_pqubits();
    out_.register_name = "q";
  }

  void flush_unary() {
    std::set<std::size_t> ready;
    for (std::size_t q = 0; q < queues_.size(); ++q) {
      for (std::size_t k = head_[q]; k < queues_[q].size(); ++k) {
        const std::size_t i = queues_[q][k];
        if (orig_.gates[i].kind != GateKind::Unary) break;
        ready.insert(i);
      }
    }
    for (std::size_t i : ready) {
      const Gate& g = orig_.gates[i];
      emit(g.name, g.params, {position_[g.operands[0]]});
      ++head_[g.operands[0]];
    }
  }

  void cnot(const ApplyCnot& c) {
    flush_unary();
    auto it = std::find_if(orig_.gates.begin(), orig_.gates.end(),
                           [&](const Gate& g) { return g.id == c.gate_id && g.kind == GateKind::Cnot; });
    if (it == orig_.gates.end()) throw Error("plan applies g" + std::to_string(c.gate_id) + ", which is not a CNOT of the circuit");
    const std::size_t i = static_cast<std::size_t>(it - orig_.gates.begin());
    for (std::size_t k = 0; k < 2; ++k) {
      const std::size_t q = it->operands[k];
      if (head_[q] >= queues_[q].size() || queues_[q][head_[q]] != i)
        throw Error("plan applies g" + std::to_string(c.gate_id) + " before its predecessors on l" + std::to_string(q));
    }
    if (position_[it->operands[0]] != c.p1 || position_[it->operands[1]] != c.p2)
      throw Error("plan applies g" + std::to_string(c.gate_id) + " on p" + std::to_string(c.p1) + ",p" +
                  std::to_string(c.p2) + " but its operands are elsewhere");
    emit("cx", "", {c.p1, c.p2});
    ++head_[it->operands[0]];
    ++head_[it->operands[1]];
    flush_unary();
  }

  void swap(std::size_t a, std::size_t b) {
    if (!graph_.adjacent(a, b)) throw Error("plan swaps p" + std::to_string(a) + " and p" + std::to_string(b) + ", which are not connected");
    if (!graph_.has_edge(a, b)) std::swap(a, b);
    SwapRecord rec{out_.gates.size(), 0, a, b};
    if (style_ == SwapStyle::SwapGate) {
      out_.gates.push_back(Gate{0, GateKind::Swap, "swap", "", {a, b}});
    } else if (graph_.has_edge(b, a)) {
      emit("cx", "", {a, b});
      emit("cx", "", {b, a});
      emit("cx", "", {a, b});
    } else {
      emit("cx", "", {a, b});
      emit("h", "", {a});
      emit("h", "", {b});
      emit("cx", "", {a, b});
      emit("h", "", {a});
      emit("h", "", {b});
      emit("cx", "", {a, b});
    }
    rec.gate_count = out_.gates.size() - rec.gate_index;
    swaps_.push_back(rec);
    std::swap(occupant_[a], occupant_[b]);
    if (occupant_[a] != kUnmapped) position_[occupant_[a]] = a;
    if (occupant_[b] != kUnmapped) position_[occupant_[b]] = b;
  }

  MappedCircuit finish(std::vector<std::size_t> initial) {
    flush_unary();
    for (std::size_t q = 0; q < queues_.size(); ++q) {
      if (head_[q] < queues_[q].size())
        throw Error("plan does not cover g" + std::to_string(orig_.gates[queues_[q][head_[q]]].id));
    }
    renumber(out_);
    return MappedCircuit{std::move(out_), std::move(initial), position_, std::move(swaps_)};
  }

 private:
  void emit(const std::string& name, const std::string& params, std::vector<std::size_t> operands) {
    GateKind kind = operands.size() == 2 ? GateKind::Cnot : GateKind::Unary;
    out_.gates.push_back(Gate{0, kind, name, params, std::move(operands)});
  }

  const Circuit& orig_;
  const CouplingGraph& graph_;
  SwapStyle style_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> occupant_;
  std::vector<std::vector<std::size_t>> queues_;  // per logical qubit, gate indices in program order
  std::vector<std::size_t> head_;
  Circuit out_;
  std::vector<SwapRecord> swaps_;
};

std::string gate_text(const Gate& g, char prefix) {
  std::ostringstream out;
  out << g.name;
  if (!g.params.empty()) out << "(" << g.params << ")";
  for (std::size_t i = 0; i < g.operands.size(); ++i) out << (i ? ", " : " ") << prefix << g.operands[i];
  return out.str();
}

}  // namespace

MappedCircuit reconstruct(const Circuit& original, const Plan& plan, const CouplingGraph& graph, SwapStyle style) {
  for (const auto& g : original.gates)
    if (g.kind == GateKind::Swap) throw Error("input circuit already contains swap gates");
  auto initial = initial_placement(original, plan, graph);
  Emitter emitter(original, graph, style, initial);
  for (const auto& action : plan.actions) {
    std::visit(Overloaded{
                   [&](const ApplyCnot& c) { emitter.cnot(c); },
                   [&](const Swap& s) { emitter.swap(s.p1, s.p2); },
                   [&](const SwapAncilla& s) { emitter.swap(s.from, s.to); },
                   [](const MapInitial&) {},
                   [](const MoveDepth&) {},
               },
               action);
  }
  return emitter.finish(std::move(initial));
}

Circuit reverse_recover(const MappedCircuit& mapped, std::size_t num_logical) {
  const std::size_t m = mapped.circuit.num_qubits;
  if (mapped.initial_map.size() != num_logical || mapped.final_map.size() != num_logical)
    throw RecoveryError("mapping covers " + std::to_string(mapped.initial_map.size()) + " logical qubits, expected " +
                        std::to_string(num_logical));
  std::vector<std::size_t> occupant(m, kUnmapped);
  for (std::size_t l = 0; l < num_logical; ++l) {
    const std::size_t p = mapped.initial_map[l];
    if (p >= m || occupant[p] != kUnmapped) throw RecoveryError("initial map is not injective into the register");
    occupant[p] = l;
  }
  std::map<std::size_t, const SwapRecord*> swap_at;
  for (const auto& rec : mapped.swaps) swap_at[rec.gate_index] = &rec;

  Circuit out;
  out.num_qubits = num_logical;
  const auto& gates = mapped.circuit.gates;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (auto it = swap_at.find(i); it != swap_at.end()) {
      const SwapRecord& rec = *it->second;
      if (i + rec.gate_count > gates.size()) throw RecoveryError("swap record at gate " + std::to_string(i) + " overruns the circuit");
      for (std::size_t k = i; k < i + rec.gate_count; ++k) {
        for (auto q : gates[k].operands)
          if (q != rec.p1 && q != rec.p2)
            throw RecoveryError("gate " + std::to_string(k) + " inside the swap on p" + std::to_string(rec.p1) + ",p" +
                                std::to_string(rec.p2) + " touches p" + std::to_string(q));
      }
      std::swap(occupant[rec.p1], occupant[rec.p2]);
      i += rec.gate_count - 1;
      continue;
    }
    Gate g = gates[i];
    if (g.kind == GateKind::Swap) throw RecoveryError("gate " + std::to_string(i) + " is a swap without a swap record");
    for (auto& q : g.operands) {
      if (q >= m || occupant[q] == kUnmapped)
        throw RecoveryError("gate " + std::to_string(i) + " (" + gate_text(gates[i], 'p') + ") acts on p" +
                            std::to_string(q) + ", which holds no logical qubit");
      q = occupant[q];
    }
    out.gates.push_back(std::move(g));
  }
  for (std::size_t l = 0; l < num_logical; ++l) {
    const std::size_t p = mapped.final_map[l];
    if (p >= m || occupant[p] != l)
      throw RecoveryError("final map sends l" + std::to_string(l) + " to p" + std::to_string(p) +
                          " but the swaps leave it elsewhere");
  }
  renumber(out);
  return out;
}

std::string first_divergence(const Circuit& expected, const Circuit& actual) {
  if (expected.num_qubits != actual.num_qubits)
    return "qubit counts differ: " + std::to_string(expected.num_qubits) + " vs " + std::to_string(actual.num_qubits);
  auto per_qubit = [](const Circuit& c) {
    std::vector<std::vector<const Gate*>> seq(c.num_qubits);
    for (const auto& g : c.gates)
      for (auto q : g.operands) seq[q].push_back(&g);
    return seq;
  };
  auto same = [](const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.name == b.name && a.params == b.params && a.operands == b.operands;
  };
  const auto exp = per_qubit(expected);
  const auto act = per_qubit(actual);
  for (std::size_t q = 0; q < expected.num_qubits; ++q) {
    const std::size_t common = std::min(exp[q].size(), act[q].size());
    for (std::size_t k = 0; k < common; ++k) {
      if (!same(*exp[q][k], *act[q][k]))
        return "l" + std::to_string(q) + ", gate " + std::to_string(k + 1) + " on this qubit: expected '" +
               gate_text(*exp[q][k], 'l') + "', got '" + gate_text(*act[q][k], 'l') + "'";
    }
    if (exp[q].size() != act[q].size())
      return "l" + std::to_string(q) + ": expected " + std::to_string(exp[q].size()) + " gates, got " +
             std::to_string(act[q].size());
  }
  return "";
}

namespace {

void map_lines(std::ostream& out, const std::string& tag, const std::vector<std::size_t>& map) {
  for (std::size_t l = 0; l < map.size(); ++l) out << "// " << tag << ": l" << l << " -> p" << map[l] << "\n";
}

std::string map_text(const std::vector<std::size_t>& map) {
  std::string s;
  for (std::size_t l = 0; l < map.size(); ++l) s += (l ? " " : "") + ("l" + std::to_string(l)) + "->p" + std::to_string(map[l]);
  return s;
}

}  // namespace

std::string write_mapped_qasm(const MappedCircuit& mapped) {
  std::ostringstream out;
  out << print_qasm(mapped.circuit);
  map_lines(out, "initial", mapped.initial_map);
  map_lines(out, "final", mapped.final_map);
  return out.str();
}

std::string mapping_report(const MappedCircuit& mapped) {
  std::ostringstream out;
  out << "initial: " << map_text(mapped.initial_map) << "\n";
  out << "final: " << map_text(mapped.final_map) << "\n";
  out << "swaps: " << mapped.swap_count() << "\n";
  for (std::size_t i = 0; i < mapped.swaps.size(); ++i) {
    const auto& s = mapped.swaps[i];
    out << "swap " << i + 1 << ": p" << s.p1 << " p" << s.p2 << " at gate " << s.gate_index + 1 << "\n";
  }
  return out.str();
}

}  // namespace qlayout
