#include <gtest/gtest.h>

#include "qlayout/instance.hpp"
#include "qlayout/plan_io.hpp"
#include "qlayout/planner.hpp"
#include "support.hpp"

using namespace qlayout;
using namespace qlayout::testing;

namespace {

RoutingInstance adder_on(const char* platform) { return make_instance(load_circuit("adder.qasm"), bidirectionalize(preset(platform))); }

Plan reference_plan() {
  return Plan{{ApplyCnot{9, 0, 1}, ApplyCnot{4, 2, 3}, ApplyCnot{10, 2, 3}, ApplyCnot{11, 1, 2}, Swap{2, 3, 2, 3},
               ApplyCnot{12, 2, 0}, ApplyCnot{13, 0, 1}, ApplyCnot{19, 0, 1}, ApplyCnot{14, 3, 2},
               ApplyCnot{20, 3, 2}, ApplyCnot{22, 2, 0}}};
}

std::string replay_error(const Plan& plan, const RoutingInstance& inst, ReplayOptions opt = {}) {
  try {
    replay(plan, inst, opt);
  } catch (const ReplayError& e) {
    return e.what();
  }
  return "accepted";
}

}  // namespace

TEST(Instance, Rejections) {
  Circuit five = parse_qasm("OPENQASM 2.0;\nqreg q[6];\ncx q[0],q[5];\n");
  EXPECT_THROW(make_instance(five, preset("tenerife")), InfeasibleError);
  Circuit routed = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nswap q[0],q[1];\n");
  EXPECT_THROW(make_instance(routed, preset("tenerife")), Error);
  auto inst = adder_on("tenerife");
  EXPECT_EQ(inst.num_logical, 4u);
  EXPECT_EQ(inst.node(11)->qubits, (std::array<std::size_t, 2>{1, 2}));
  EXPECT_EQ(inst.node(5), nullptr);
}

TEST(Replay, ReferencePlan) {
  auto inst = adder_on("tenerife");
  SearchState s = replay(reference_plan(), inst);
  EXPECT_TRUE(s.all_done());
  EXPECT_EQ(s.swaps_used, 1u);
  EXPECT_EQ(s.position, (std::vector<std::size_t>{0, 1, 3, 2}));
  EXPECT_EQ(reference_plan().swap_count(), 1u);
}

TEST(Replay, TruncatedPlanNamesFirstUnmetDone) {
  auto inst = adder_on("tenerife");
  Plan p = reference_plan();
  p.actions.resize(7);
  EXPECT_EQ(replay_error(p, inst), "step 7: plan ends before the goal: unmet (done g14)");
  ReplayOptions partial;
  partial.require_complete = false;
  EXPECT_FALSE(replay(p, inst, partial).all_done());
}

TEST(Replay, PreconditionFailures) {
  auto inst = adder_on("tenerife");
  Plan p = reference_plan();
  std::swap(p.actions[2], p.actions[1]);  // g10 before g4
  EXPECT_EQ(replay_error(p, inst), "step 1: apply_cnot g10 p2 p3: unmet precondition (done g4)");

  p = reference_plan();
  p.actions.erase(p.actions.begin() + 4);  // drop the swap
  EXPECT_NE(replay_error(p, inst).find("step 4: apply_cnot g12 p2 p0: l3 is on p3, not p2"), std::string::npos);

  p = Plan{{ApplyCnot{9, 0, 3}}};
  EXPECT_NE(replay_error(p, inst).find("no coupling p0 -> p3"), std::string::npos);

  p = Plan{{ApplyCnot{9, 0, 1}, ApplyCnot{4, 0, 2}}};
  EXPECT_NE(replay_error(p, inst).find("cannot map l2 onto occupied p0"), std::string::npos);

  p = Plan{{ApplyCnot{9, 0, 1}, ApplyCnot{9, 0, 1}}};
  EXPECT_NE(replay_error(p, inst).find("already applied"), std::string::npos);

  p = Plan{{ApplyCnot{9, 0, 1}, Swap{0, 1, 0, 3}}};
  EXPECT_NE(replay_error(p, inst).find("is not on p3"), std::string::npos);

  p = Plan{{ApplyCnot{9, 0, 1}, SwapAncilla{0, 0, 3}}};
  EXPECT_NE(replay_error(p, inst).find("not connected"), std::string::npos);

  p = Plan{{ApplyCnot{99, 0, 1}}};
  EXPECT_NE(replay_error(p, inst).find("g99 is not a CNOT"), std::string::npos);

  p = Plan{{MoveDepth{2, 3}}};
  EXPECT_NE(replay_error(p, inst).find("only valid under layered semantics"), std::string::npos);
}

TEST(Replay, GlobalSemantics) {
  Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\n");
  auto inst = make_instance(c, preset("tenerife"));
  ReplayOptions g;
  g.semantics = Semantics::Global;
  Plan ok{{MapInitial{0, 0}, MapInitial{1, 1}, MapInitial{2, 2}, ApplyCnot{1, 0, 1}, MoveDepth{1, 2}, ApplyCnot{2, 1, 2}}};
  EXPECT_TRUE(replay(ok, inst, g).all_done());
  Plan early{{MapInitial{0, 0}, MapInitial{1, 1}, MapInitial{2, 2}, ApplyCnot{1, 0, 1}, ApplyCnot{2, 1, 2}}};
  EXPECT_NE(replay_error(early, inst, g).find("belongs to depth d2 but current depth is d1"), std::string::npos);
  Plan unmapped{{MapInitial{0, 0}, MapInitial{1, 1}, ApplyCnot{1, 0, 1}}};
  EXPECT_NE(replay_error(unmapped, inst, g).find("unmet (done g2)"), std::string::npos);
  Plan bad_move{{MoveDepth{2, 1}}};
  EXPECT_NE(replay_error(bad_move, inst, g).find("current depth is not d2"), std::string::npos);
}

TEST(Solver, AdderTenerife) {
  auto inst = adder_on("tenerife");
  SolveStats stats;
  Plan p = solve_optimal(inst, {}, &stats);
  EXPECT_EQ(p.swap_count(), 1u);
  EXPECT_TRUE(replay(p, inst).all_done());
  EXPECT_GT(stats.expanded, 0u);
  EXPECT_EQ(solve_optimal(inst), p);  // deterministic
}

TEST(Solver, AdderMelbourne) {
  auto inst = adder_on("melbourne");
  Plan p = solve_optimal(inst);
  EXPECT_EQ(p.swap_count(), 0u);
  EXPECT_TRUE(replay(p, inst).all_done());
}

TEST(Solver, NoCnots) {
  auto inst = make_instance(parse_qasm("OPENQASM 2.0;\nqreg q[3];\nh q[0];\n"), preset("tenerife"));
  EXPECT_TRUE(solve_optimal(inst).actions.empty());
}

TEST(Solver, DisconnectedIsInfeasible) {
  CouplingGraph split(4, {{0, 1}, {2, 3}});
  auto inst = make_instance(parse_qasm("OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\ncx q[0],q[2];\n"), split);
  EXPECT_THROW(solve_optimal(inst), InfeasibleError);
}

TEST(Solver, TimeLimit) {
  std::mt19937 rng(3);
  auto inst = make_instance(random_circuit(rng, 9, 60, 0.0), bidirectionalize(preset("melbourne")));
  SolveOptions so;
  so.time_limit = std::chrono::milliseconds(0);
  EXPECT_THROW(solve_optimal(inst, so), TimeoutError);
}

TEST(Solver, AncillaHelps) {
  // Three-qubit triangle of interactions on a 4-qubit line: an ancilla move
  // is cheaper than swapping two mapped qubits back and forth.
  CouplingGraph line(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}, "line4");
  Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\ncx q[0],q[2];\ncx q[0],q[1];\n");
  auto inst = make_instance(c, line);
  SolveOptions with, without;
  without.ancillary = false;
  std::size_t a = solve_optimal(inst, with).swap_count();
  std::size_t b = solve_optimal(inst, without).swap_count();
  EXPECT_LE(a, b);
  OracleOptions oa, ob;
  ob.ancillary = false;
  EXPECT_EQ(brute_force_oracle(inst, oa)->swap_count(), a);
  EXPECT_EQ(brute_force_oracle(inst, ob)->swap_count(), b);
}

TEST(Oracle, BudgetAndLimits) {
  auto inst = adder_on("tenerife");
  OracleOptions zero;
  zero.swap_budget = 0;
  EXPECT_FALSE(brute_force_oracle(inst, zero).has_value());
  auto plan = brute_force_oracle(inst);
  ASSERT_TRUE(plan.has_value());
  EXPECT_EQ(plan->swap_count(), 1u);
  EXPECT_TRUE(replay(*plan, inst).all_done());
  OracleOptions tiny;
  tiny.node_limit = 10;
  EXPECT_THROW(brute_force_oracle(inst, tiny), TimeoutError);
}

// Harder than the acceptance corpus: directed and sparse platforms, five
// logical qubits.
class OracleAgreement : public ::testing::TestWithParam<int> {};

TEST_P(OracleAgreement, SolverMatchesOracle) {
  const std::vector<CouplingGraph> graphs = {
      CouplingGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, "directed-line5"),
      bidirectionalize(CouplingGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, "ring5")),
      CouplingGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, "directed-star5"),
      preset("tenerife"),
  };
  std::mt19937 rng(static_cast<unsigned>(1000 + GetParam()));
  for (const auto& graph : graphs) {
    for (int k = 0; k < 6; ++k) {
      Circuit c = random_circuit(rng, 4 + (k % 2), 4 + k, 0.2);
      auto inst = make_instance(c, graph);
      for (bool anc : {true, false}) {
        OracleOptions oo;
        oo.ancillary = anc;
        oo.swap_budget = 10;
        auto expected = brute_force_oracle(inst, oo);
        SolveOptions so;
        so.ancillary = anc;
        if (!expected) {
          EXPECT_THROW(solve_optimal(inst, so), InfeasibleError) << graph.name() << "\n" << print_qasm(c);
          continue;
        }
        Plan p = solve_optimal(inst, so);
        EXPECT_EQ(p.swap_count(), expected->swap_count()) << graph.name() << " anc=" << anc << "\n" << print_qasm(c);
        EXPECT_TRUE(replay(p, inst).all_done());
        so.heuristic = Heuristic::None;
        EXPECT_EQ(solve_optimal(inst, so).swap_count(), expected->swap_count());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleAgreement, ::testing::Range(0, 4));
