#include <gtest/gtest.h>

#include "qlayout/pddl_encode.hpp"
#include "qlayout/pddl_sexpr.hpp"
#include "support.hpp"

using namespace qlayout;
using qlayout::testing::load_circuit;
using qlayout::testing::read_data;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return pddl::normalize(text).find(needle) != std::string::npos;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::string n = pddl::normalize(text);
  std::size_t c = 0;
  for (auto at = n.find(needle); at != std::string::npos; at = n.find(needle, at + 1)) ++c;
  return c;
}

}  // namespace

TEST(SExpr, ParseAndPrint) {
  pddl::SExpr e = pddl::parse_sexpr("(A (b C) ; comment\n d)");
  ASSERT_TRUE(e.is_list);
  EXPECT_EQ(pddl::to_string(e), "(a (b c) d)");
  EXPECT_TRUE(e.headed("a"));
  EXPECT_THROW(pddl::parse_sexpr("(a (b)"), pddl::SyntaxError);
  EXPECT_THROW(pddl::parse_sexpr("(a) b"), pddl::SyntaxError);
  EXPECT_THROW(pddl::parse_sexpr(")"), pddl::SyntaxError);
  EXPECT_THROW(pddl::parse_sexpr(""), pddl::SyntaxError);
}

TEST(SExpr, Normalize) {
  EXPECT_EQ(pddl::normalize("(and (x) (y)\n (x))"), "(and (x) (y))");
  EXPECT_EQ(pddl::normalize("(define (problem p) (:init (connected p1 p0) (connected p0 p1)))"),
            "(define (problem p) (:init (connected p0 p1) (connected p1 p0)))");
}

TEST(Encode, GoldenLocalCompact) {
  PddlPair pair = encode(load_circuit("adder.qasm"), preset("tenerife"), EncodingConfig{});
  EXPECT_EQ(pddl::normalize(pair.domain_text), pddl::normalize(read_data("adder_local_domain.pddl")));
  EXPECT_EQ(pddl::normalize(pair.problem_text), pddl::normalize(read_data("adder_local_problem.pddl")));
}

TEST(Encode, Deterministic) {
  for (auto model : {EncodingModel::Global, EncodingModel::LiftedInitial, EncodingModel::LiftedCompact,
                     EncodingModel::LocalCompact}) {
    EncodingConfig cfg;
    cfg.model = model;
    PddlPair a = encode(load_circuit("adder.qasm"), preset("melbourne"), cfg);
    PddlPair b = encode(load_circuit("adder.qasm"), preset("melbourne"), cfg);
    EXPECT_EQ(a.domain_text, b.domain_text);
    EXPECT_EQ(a.problem_text, b.problem_text);
  }
}

TEST(Encode, AllVariantsAreWellFormed) {
  Circuit adder = load_circuit("adder.qasm");
  Circuit tiny = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\n");
  for (const Circuit* c : {&adder, &tiny}) {
    for (const char* platform : {"tenerife", "melbourne"}) {
      for (auto model : {EncodingModel::Global, EncodingModel::LiftedInitial, EncodingModel::LiftedCompact,
                         EncodingModel::LocalCompact}) {
        for (bool anc : {false, true}) {
          for (bool bidir : {false, true}) {
            for (unsigned cost : {1u, 3u}) {
              EncodingConfig cfg{model, anc, bidir, cost};
              PddlPair pair = encode(*c, preset(platform), cfg);
              auto issues = pddl::check_pair(pair.domain_text, pair.problem_text);
              EXPECT_TRUE(issues.empty()) << to_string(model) << " " << platform << " a" << anc << " b" << bidir
                                          << " cost " << cost << ": " << issues.front();
              EXPECT_EQ(contains(pair.domain_text, "swap-ancillary1"), anc);
              EXPECT_EQ(contains(pair.domain_text, ":action-costs"), cost != 1);
              EXPECT_EQ(contains(pair.problem_text, "(:metric minimize (total-cost))"), cost != 1);
            }
          }
        }
      }
    }
  }
}

TEST(Encode, Bidirectional) {
  EncodingConfig cfg;
  cfg.bidirectional = false;
  PddlPair directed = encode(load_circuit("adder.qasm"), preset("melbourne"), cfg);
  EXPECT_EQ(count(directed.problem_text, "(connected "), 18u);
  EXPECT_TRUE(contains(directed.problem_text, "(connected p1 p0)"));
  EXPECT_FALSE(contains(directed.problem_text, "(connected p0 p1)"));
  cfg.bidirectional = true;
  EXPECT_EQ(count(encode(load_circuit("adder.qasm"), preset("melbourne"), cfg).problem_text, "(connected "), 36u);
}

TEST(Encode, GlobalModel) {
  EncodingConfig cfg;
  cfg.model = EncodingModel::Global;
  PddlPair pair = encode(load_circuit("adder.qasm"), preset("tenerife"), cfg);
  EXPECT_TRUE(contains(pair.problem_text, "(current_depth d2)"));
  EXPECT_TRUE(contains(pair.problem_text, "d2 d3 d4 d5 d6 d8 d10 - depth"));
  EXPECT_TRUE(contains(pair.problem_text, "(next_depth d6 d8)"));
  EXPECT_EQ(count(pair.problem_text, "(next_depth "), 6u);
  EXPECT_TRUE(contains(pair.problem_text, "(rcnot l3 l0 d5)"));
  EXPECT_TRUE(contains(pair.problem_text, "(rcnot l1 l2 d5)"));
  EXPECT_EQ(count(pair.problem_text, "(not (rcnot "), 10u);
  EXPECT_EQ(count(pair.problem_text, "(mapped_lq "), 4u);
  EXPECT_TRUE(contains(pair.domain_text, "(:action move_depth"));
  EXPECT_TRUE(contains(pair.domain_text, "(:action map_initial"));
}

TEST(Encode, LiftedModels) {
  EncodingConfig cfg;
  cfg.model = EncodingModel::LiftedInitial;
  PddlPair li = encode(load_circuit("adder.qasm"), preset("tenerife"), cfg);
  EXPECT_TRUE(contains(li.domain_text, "(:action map_initial"));
  EXPECT_TRUE(contains(li.problem_text, "(cnot l1 l2 g11 g9 g10)"));
  EXPECT_TRUE(contains(li.problem_text, "(cnot l2 l3 g4 l2 l3)"));

  cfg.model = EncodingModel::LiftedCompact;
  PddlPair lc = encode(load_circuit("adder.qasm"), preset("tenerife"), cfg);
  for (const char* a : {"apply_cnot_gate_gate", "apply_cnot_input_input", "apply_cnot_gate_input",
                        "apply_cnot_input_gate"})
    EXPECT_TRUE(contains(lc.domain_text, std::string("(:action ") + a)) << a;
  EXPECT_FALSE(contains(lc.domain_text, "(:action map_initial"));
}

TEST(Encode, ActionCostsOnlyOnSwaps) {
  EncodingConfig cfg;
  cfg.swap_cost = 5;
  PddlPair pair = encode(load_circuit("adder.qasm"), preset("tenerife"), cfg);
  EXPECT_EQ(count(pair.domain_text, "(increase (total-cost) 5)"), 3u);
  EXPECT_TRUE(contains(pair.problem_text, "(= (total-cost) 0)"));
}

TEST(Encode, ModelNames) {
  EXPECT_EQ(parse_encoding_model("local"), EncodingModel::LocalCompact);
  EXPECT_EQ(parse_encoding_model("local_compact"), EncodingModel::LocalCompact);
  EXPECT_EQ(parse_encoding_model("global"), EncodingModel::Global);
  EXPECT_EQ(parse_encoding_model("lifted_initial"), EncodingModel::LiftedInitial);
  EXPECT_EQ(parse_encoding_model("lifted_compact"), EncodingModel::LiftedCompact);
  EXPECT_THROW(parse_encoding_model("temporal"), Error);
  EXPECT_EQ(to_string(EncodingModel::LocalCompact), "local");
}

TEST(CheckPair, FindsProblems) {
  PddlPair pair = encode(load_circuit("adder.qasm"), preset("tenerife"), EncodingConfig{});
  std::string bad_problem = pair.problem_text;
  bad_problem.replace(bad_problem.find("(done g4)"), 9, "(done g5)");
  EXPECT_FALSE(pddl::check_pair(pair.domain_text, bad_problem).empty());
  std::string bad_domain = pair.domain_text;
  bad_domain.replace(bad_domain.find("(mapped l2 ?p1)"), 15, "(mapped l2 ?p9)");
  EXPECT_FALSE(pddl::check_pair(bad_domain, pair.problem_text).empty());
}
