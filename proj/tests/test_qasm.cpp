#include <gtest/gtest.h>

#include "qlayout/qasm.hpp"
#include "support.hpp"

using namespace qlayout;
using qlayout::testing::load_circuit;

namespace {

const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n";

QasmError parse_error(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const QasmError& e) {
    return e;
  }
  ADD_FAILURE() << "no QasmError for:\n" << text;
  return QasmError("none", 0, 0);
}

}  // namespace

TEST(Qasm, ParsesAdder) {
  Circuit c = load_circuit("adder.qasm");
  EXPECT_EQ(c.num_qubits, 4u);
  EXPECT_EQ(c.gates.size(), 23u);
  EXPECT_EQ(c.cnot_count(), 10u);
  const Gate& g4 = c.gates[3];
  EXPECT_EQ(g4.id, 4u);
  EXPECT_EQ(g4.kind, GateKind::Cnot);
  EXPECT_EQ(g4.operands, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c.gates[7].name, "tdg");
  EXPECT_EQ(c.gates[7].operands, (std::vector<std::size_t>{3}));
}

TEST(Qasm, RoundTrip) {
  Circuit c = load_circuit("adder.qasm");
  EXPECT_EQ(parse_qasm(print_qasm(c)), c);
  Circuit p = parse_qasm(std::string(kHeader) + "rz( pi / 4 ) q[0];\nu3(0.1,0.2,0.3) q[2];\nswap q[0], q[1];\n");
  EXPECT_EQ(p.gates[0].params, "pi/4");
  EXPECT_EQ(p.gates[2].kind, GateKind::Swap);
  EXPECT_EQ(parse_qasm(print_qasm(p)), p);
}

TEST(Qasm, EmptyCircuitAndComments) {
  Circuit c = parse_qasm("// leading\nOPENQASM 2.0; // header\nqreg r[2]; // reg\n");
  EXPECT_EQ(c.num_qubits, 2u);
  EXPECT_EQ(c.register_name, "r");
  EXPECT_TRUE(c.gates.empty());
}

TEST(Qasm, UppercaseCxIsCnot) {
  Circuit c = parse_qasm(std::string(kHeader) + "CX q[0], q[1];\n");
  EXPECT_EQ(c.gates[0].kind, GateKind::Cnot);
  EXPECT_EQ(c.gates[0].name, "cx");
}

TEST(Qasm, OutOfRangeOperandReportsPosition) {
  QasmError e = parse_error(std::string(kHeader) + "h q[0];\ncx q[0], q[7];\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 12u);
  EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
}

TEST(Qasm, RejectsUnsupportedStatements) {
  for (const char* stmt : {"creg c[3];", "measure q[0] -> c[0];", "barrier q[0];", "reset q[0];",
                           "gate foo a { x a; }", "if (c==1) x q[0];", "opaque bar a;"}) {
    QasmError e = parse_error(std::string(kHeader) + stmt + "\n");
    EXPECT_EQ(e.line(), 4u) << stmt;
    EXPECT_EQ(e.column(), 1u) << stmt;
    EXPECT_NE(std::string(e.what()).find("unsupported statement"), std::string::npos) << stmt;
  }
}

TEST(Qasm, RejectsOtherShapes) {
  EXPECT_NE(std::string(parse_error(std::string(kHeader) + "ccx q[0], q[1], q[2];\n").what()).find("3 qubits"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error(std::string(kHeader) + "cz q[0], q[1];\n").what()).find("'cz'"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error(std::string(kHeader) + "h q;\n").what()).find("whole-register"),
            std::string::npos);
  parse_error(std::string(kHeader) + "cx q[1], q[1];\n");
  parse_error(std::string(kHeader) + "qreg r[2];\n");
  parse_error(std::string(kHeader) + "h r[0];\n");
  parse_error("OPENQASM 3.0;\nqreg q[1];\n");
  parse_error("qreg q[1];\n");
  parse_error("OPENQASM 2.0;\n");
  parse_error("OPENQASM 2.0;\nqreg q[2];\nh q[0]\n");
  parse_error("OPENQASM 2.0;\nqreg q[2];\nrz(pi q[0];\n");
}

TEST(Qasm, Renumber) {
  Circuit c = load_circuit("adder.qasm");
  c.gates.erase(c.gates.begin());
  renumber(c);
  for (std::size_t i = 0; i < c.gates.size(); ++i) EXPECT_EQ(c.gates[i].id, i + 1);
}
