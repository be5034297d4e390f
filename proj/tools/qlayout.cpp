// qlayout: encode circuits as planning problems, solve them optimally, or
// ingest plans produced by an external planner.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qlayout/arch.hpp"
#include "qlayout/instance.hpp"
#include "qlayout/pddl_encode.hpp"
#include "qlayout/plan_io.hpp"
#include "qlayout/planner.hpp"
#include "qlayout/qasm.hpp"
#include "qlayout/reconstruct.hpp"
#include "qlayout/verify.hpp"

namespace fs = std::filesystem;
using namespace qlayout;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kInfeasible = 3, kTimeout = 4 };

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

struct Common {
  std::string input;
  std::string platform = "tenerife";
  std::string model = "local";
  int ancillary = 1;
  int bidirectional = 1;
  std::string prefix;
  std::string dot;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "OPENQASM 2.0 circuit")->required();
  cmd->add_option("-p,--platform", c.platform, "tenerife, melbourne or a coupling file")->capture_default_str();
  cmd->add_option("-a,--ancillary", c.ancillary, "1 allows swaps with unoccupied qubits")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  cmd->add_option("-b,--bidirectional", c.bidirectional, "1 treats every coupling as usable in both directions")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  cmd->add_option("-o,--output", c.prefix, "output path prefix (default: input path without extension)");
  cmd->add_option("--dot", c.dot, "write the CNOT dependency graph in Graphviz format");
}

struct Loaded {
  std::string name;
  Circuit circuit;
  CouplingGraph graph;  // as used for routing, after -b
  std::string prefix;
};

Loaded load(const Common& c) {
  Loaded out;
  out.name = fs::path(c.input).stem().string();
  out.circuit = parse_qasm(read_file(c.input));
  CouplingGraph g;
  if (c.platform == "tenerife" || c.platform == "melbourne")
    g = preset(c.platform);
  else
    g = load_coupling(read_file(c.platform), fs::path(c.platform).stem().string());
  out.graph = c.bidirectional ? bidirectionalize(g) : g;
  out.prefix = c.prefix.empty() ? (fs::path(c.input).parent_path() / out.name).string() : c.prefix;
  if (!c.dot.empty()) write_file(c.dot, to_dot(build_depgraph(out.circuit), out.circuit.num_qubits));
  return out;
}

EncodingConfig config_of(const Common& c) {
  EncodingConfig cfg;
  cfg.model = parse_encoding_model(c.model);
  cfg.ancillary_swaps = c.ancillary != 0;
  cfg.bidirectional = c.bidirectional != 0;
  return cfg;
}

std::string seconds(std::chrono::steady_clock::duration d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::chrono::duration<double>(d).count());
  return buf;
}

struct Finish {
  bool verify = true;
  std::string swap_style = "swap";
  std::size_t oracle_nodes = 200000;
};

void add_finish(CLI::App* cmd, Finish& f) {
  cmd->add_option("--swap-style", f.swap_style, "swap or three_cnot")->capture_default_str();
  cmd->add_flag("!--no-verify", f.verify, "skip the verification checks");
  cmd->add_option("--oracle-nodes", f.oracle_nodes, "node budget of the optimality cross-check (0 disables it)")
      ->capture_default_str();
}

// Reconstructs, verifies and writes the outputs. Returns the exit code.
int finish(const Loaded& in, const Common& c, const Finish& f, const RoutingInstance& instance, const Plan& plan,
           std::chrono::steady_clock::duration elapsed) {
  MappedCircuit mapped = reconstruct(in.circuit, plan, in.graph, parse_swap_style(f.swap_style));

  std::ostringstream report;
  report << "circuit: " << in.name << "\n";
  report << "platform: " << in.graph.name() << " (" << in.graph.num_pqubits() << " qubits)\n";
  report << "ancillary: " << c.ancillary << "\n";
  report << "bidirectional: " << c.bidirectional << "\n";
  report << "q: " << in.circuit.num_qubits << "\n";
  report << "cnots: " << in.circuit.cnot_count() << "\n";
  report << mapping_report(mapped);

  bool ok = true;
  if (f.verify) {
    VerifyReport vr = verify_mapping(in.circuit, mapped, in.graph);
    if (f.oracle_nodes > 0) {
      OracleOptions oo;
      oo.ancillary = c.ancillary != 0;
      oo.node_limit = f.oracle_nodes;
      vr.checks.push_back(check_optimality(instance, plan.swap_count(), oo).check);
    }
    report << vr.to_text();
    write_file(in.prefix + ".verify.json", vr.to_json());
    ok = vr.passed();
  }
  write_file(in.prefix + ".mapped.qasm", write_mapped_qasm(mapped));
  write_file(in.prefix + ".report.txt", report.str());

  std::cout << in.name << " q=" << in.circuit.num_qubits << " cnots=" << in.circuit.cnot_count()
            << " swaps=" << mapped.swap_count() << " time=" << seconds(elapsed) << "s\n";
  std::cout << "swaps: " << mapped.swap_count() << "\n";
  if (f.verify) std::cout << (ok ? "verified" : "VERIFICATION FAILED") << "\n";
  if (!ok) std::cerr << report.str();
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal qubit layout synthesis through classical planning"};
  app.require_subcommand(1);

  Common enc;
  unsigned swap_cost = 1;
  auto* encode_cmd = app.add_subcommand("encode", "write the PDDL domain and problem files");
  add_common(encode_cmd, enc);
  encode_cmd->add_option("-m,--model", enc.model, "global, lifted_initial, lifted_compact or local")
      ->capture_default_str();
  encode_cmd->add_option("--swap-cost", swap_cost, "cost of one swap (other than 1 enables action costs)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Common sol;
  Finish sol_fin;
  std::string heuristic = "maxdist";
  double time_limit = 0;
  std::string plan_out;
  std::string plan_out_format = "fd";
  auto* solve_cmd = app.add_subcommand("solve", "route with the built-in optimal planner");
  add_common(solve_cmd, sol);
  add_finish(solve_cmd, sol_fin);
  solve_cmd->add_option("--heuristic", heuristic, "maxdist or none")->capture_default_str();
  solve_cmd->add_option("--time-limit", time_limit, "seconds (0 means none)")->capture_default_str();
  solve_cmd->add_option("--plan-out", plan_out, "also write the plan in planner output format");
  solve_cmd->add_option("-m,--model", sol.model, "encoding whose action names --plan-out uses")->capture_default_str();
  solve_cmd->add_option("--format", plan_out_format, "fd or madagascar for --plan-out")->capture_default_str();

  Common ing;
  Finish ing_fin;
  std::string plan_file;
  std::string plan_format = "auto";
  auto* ingest_cmd = app.add_subcommand("ingest", "validate and reconstruct a plan from an external planner");
  add_common(ingest_cmd, ing);
  add_finish(ingest_cmd, ing_fin);
  ingest_cmd->add_option("-m,--model", ing.model, "encoding the plan was produced for")->capture_default_str();
  ingest_cmd->add_option("--plan", plan_file, "plan file")->required();
  ingest_cmd->add_option("--format", plan_format, "fd, madagascar or auto")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode_cmd) {
      Loaded in = load(enc);
      EncodingConfig cfg = config_of(enc);
      cfg.swap_cost = swap_cost;
      make_instance(in.circuit, in.graph);  // reports n > m and swap inputs
      PddlPair pair = encode(in.circuit, in.graph, cfg);
      write_file(in.prefix + ".domain.pddl", pair.domain_text);
      write_file(in.prefix + ".problem.pddl", pair.problem_text);
      std::cout << in.name << " q=" << in.circuit.num_qubits << " cnots=" << in.circuit.cnot_count() << "\n";
      return kOk;
    }
    if (*solve_cmd) {
      Loaded in = load(sol);
      EncodingConfig cfg = config_of(sol);
      RoutingInstance instance = make_instance(in.circuit, in.graph);
      SolveOptions so;
      so.ancillary = cfg.ancillary_swaps;
      if (heuristic == "none")
        so.heuristic = Heuristic::None;
      else if (heuristic != "maxdist")
        throw IoError("unknown heuristic '" + heuristic + "' (expected maxdist or none)");
      if (time_limit > 0) so.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
      const auto start = std::chrono::steady_clock::now();
      Plan plan = solve_optimal(instance, so);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (!plan_out.empty()) {
        RawPlan raw = to_raw(plan, cfg.model, instance);
        PlanFormat fmt = parse_plan_format(plan_out_format);
        write_file(plan_out, fmt == PlanFormat::Madagascar ? write_plan_madagascar(raw) : write_plan_fd(raw));
      }
      return finish(in, sol, sol_fin, instance, plan, elapsed);
    }
    Loaded in = load(ing);
    EncodingConfig cfg = config_of(ing);
    RoutingInstance instance = make_instance(in.circuit, in.graph);
    const auto start = std::chrono::steady_clock::now();
    RawPlan raw = parse_plan(read_file(plan_file), parse_plan_format(plan_format));
    Plan plan = bind_plan(raw, cfg, instance);
    return finish(in, ing, ing_fin, instance, plan, std::chrono::steady_clock::now() - start);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const ReplayError& e) {
    std::cerr << "invalid plan: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const PlanFormatError& e) {
    std::cerr << "invalid plan: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
