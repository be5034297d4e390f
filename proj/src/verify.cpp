#include "qlayout/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qlayout/simulator.hpp"

namespace qlayout {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckResult check_connectivity(const MappedCircuit& mapped, const CouplingGraph& graph) {
  CheckResult r{"connectivity", Verdict::Pass, "", {}};
  std::size_t two_qubit = 0;
  for (std::size_t i = 0; i < mapped.circuit.gates.size(); ++i) {
    const Gate& g = mapped.circuit.gates[i];
    if (!g.is_two_qubit()) continue;
    ++two_qubit;
    const std::size_t a = g.operands[0], b = g.operands[1];
    const bool ok = g.kind == GateKind::Cnot ? graph.has_edge(a, b) : graph.adjacent(a, b);
    if (!ok)
      r.issues.push_back("gate " + std::to_string(i + 1) + ": " + g.name + " q[" + std::to_string(a) + "], q[" +
                         std::to_string(b) + "] is not on a coupling edge");
  }
  if (!r.issues.empty()) r.verdict = Verdict::Fail;
  r.detail = std::to_string(two_qubit) + " two-qubit gates, " + std::to_string(r.issues.size()) + " violations";
  return r;
}

CheckResult check_equivalence(const Circuit& original, const MappedCircuit& mapped, const EquivalenceOptions& options) {
  CheckResult r{"equivalence", Verdict::Pass, "", {}};
  const std::size_t n = original.num_qubits;
  for (const Circuit* c : {&original, &mapped.circuit}) {
    for (const auto& g : c->gates) {
      if (!gate_supported(g)) {
        r.verdict = Verdict::Skipped;
        r.detail = "no semantics for gate '" + g.name + (g.params.empty() ? "" : "(" + g.params + ")") + "'";
        return r;
      }
    }
  }
  if (mapped.initial_map.size() != n || mapped.final_map.size() != n) {
    r.verdict = Verdict::Fail;
    r.detail = "mapping does not cover the circuit's qubits";
    return r;
  }

  // Simulate only the physical wires that matter.
  std::set<std::size_t> active(mapped.initial_map.begin(), mapped.initial_map.end());
  active.insert(mapped.final_map.begin(), mapped.final_map.end());
  for (const auto& g : mapped.circuit.gates) active.insert(g.operands.begin(), g.operands.end());
  const std::size_t wires = active.size();
  if (n > options.max_qubits || wires > options.max_qubits) {
    r.verdict = Verdict::Skipped;
    r.detail = std::to_string(wires) + " active wires exceed the limit of " + std::to_string(options.max_qubits);
    return r;
  }
  std::vector<std::size_t> wire_of(mapped.circuit.num_qubits, static_cast<std::size_t>(-1));
  {
    std::size_t w = 0;
    for (auto p : active) wire_of[p] = w++;
  }
  std::vector<std::size_t> identity(n);
  for (std::size_t l = 0; l < n; ++l) identity[l] = l;

  auto embed = [&](std::size_t logical_index, const std::vector<std::size_t>& map) {
    std::size_t k = 0;
    for (std::size_t l = 0; l < n; ++l)
      if (logical_index >> l & 1) k |= std::size_t{1} << wire_of[map[l]];
    return k;
  };

  std::vector<std::size_t> inputs;
  if (n <= options.exhaustive_up_to) {
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) inputs.push_back(x);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, (std::size_t{1} << n) - 1);
    for (std::size_t k = 0; k < options.random_inputs; ++k) inputs.push_back(pick(rng));
  }

  std::optional<Amplitude> global_phase;
  double worst = 0;
  for (std::size_t x : inputs) {
    Statevector ref(n, x);
    ref.run(original, identity);
    Statevector got(wires, embed(x, mapped.initial_map));
    got.run(mapped.circuit, wire_of);

    std::vector<Amplitude> expected(got.amplitudes().size());
    for (std::size_t k = 0; k < ref.amplitudes().size(); ++k) expected[embed(k, mapped.final_map)] = ref.amplitudes()[k];

    if (!global_phase) {
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (std::abs(expected[k]) > 1e-9) {
          if (std::abs(got.amplitudes()[k]) < 1e-9) break;
          global_phase = got.amplitudes()[k] / expected[k];
          break;
        }
      }
      if (!global_phase || std::abs(std::abs(*global_phase) - 1) > options.tolerance) {
        r.verdict = Verdict::Fail;
        r.issues.push_back("input " + std::to_string(x) + ": output differs beyond a phase");
        break;
      }
    }
    double diff = 0;
    for (std::size_t k = 0; k < expected.size(); ++k)
      diff = std::max(diff, std::abs(got.amplitudes()[k] - *global_phase * expected[k]));
    worst = std::max(worst, diff);
    if (diff > options.tolerance) {
      r.verdict = Verdict::Fail;
      std::ostringstream msg;
      msg << "input " << x << ": max amplitude error " << diff;
      r.issues.push_back(msg.str());
      if (r.issues.size() >= 8) break;
    }
  }
  std::ostringstream detail;
  detail << inputs.size() << (n <= options.exhaustive_up_to ? " basis inputs (all)" : " random basis inputs") << " on "
         << wires << " wires";
  if (r.verdict == Verdict::Pass) detail << ", max error " << (worst < 1e-15 ? 0.0 : worst);
  r.detail = detail.str();
  return r;
}

CheckResult check_recovery(const Circuit& original, const MappedCircuit& mapped) {
  CheckResult r{"recovery", Verdict::Pass, "", {}};
  try {
    Circuit back = reverse_recover(mapped, original.num_qubits);
    Circuit strip = original;
    strip.register_name = back.register_name;
    std::string why = first_divergence(strip, back);
    if (!why.empty()) {
      r.verdict = Verdict::Fail;
      r.issues.push_back(why);
    }
    r.detail = std::to_string(back.gates.size()) + " gates recovered";
  } catch (const RecoveryError& e) {
    r.verdict = Verdict::Fail;
    r.issues.push_back(e.what());
    r.detail = "recovery aborted";
  }
  return r;
}

OptimalityResult check_optimality(const RoutingInstance& instance, std::size_t claimed, OracleOptions options) {
  OptimalityResult out;
  out.check.name = "optimality";
  options.swap_budget = claimed;
  try {
    auto plan = brute_force_oracle(instance, options);
    if (!plan) {
      out.check.verdict = Verdict::Fail;
      out.check.detail = "no plan with " + std::to_string(claimed) + " swaps exists";
      out.check.issues.push_back(out.check.detail);
      return out;
    }
    out.optimum = plan->swap_count();
    out.lower_bound_certified = *out.optimum == claimed;
    if (*out.optimum == claimed) {
      out.check.verdict = Verdict::Pass;
      out.check.detail = claimed == 0 ? "0 swaps is trivially minimal"
                                      : "no plan with " + std::to_string(claimed - 1) + " swaps; " +
                                            std::to_string(claimed) + " feasible";
    } else {
      out.check.verdict = Verdict::Fail;
      out.check.detail = "oracle found " + std::to_string(*out.optimum) + " swaps, claimed " + std::to_string(claimed);
      out.check.issues.push_back(out.check.detail);
    }
  } catch (const TimeoutError& e) {
    out.check.verdict = Verdict::Inconclusive;
    out.check.detail = e.what();
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::Fail; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << to_string(c.verdict);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    for (const auto& issue : c.issues) out << "  " << issue << "\n";
  }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}, {"issues", c.issues}});
  return j.dump(2) + "\n";
}

VerifyReport verify_mapping(const Circuit& original, const MappedCircuit& mapped, const CouplingGraph& graph,
                            const EquivalenceOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_connectivity(mapped, graph));
  report.checks.push_back(check_recovery(original, mapped));
  report.checks.push_back(check_equivalence(original, mapped, options));
  return report;
}

}  // namespace qlayout
