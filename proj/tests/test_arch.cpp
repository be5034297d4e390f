#include <gtest/gtest.h>

#include "qlayout/arch.hpp"

using namespace qlayout;

TEST(Arch, Tenerife) {
  CouplingGraph g = preset("tenerife");
  EXPECT_EQ(g.num_pqubits(), 5u);
  EXPECT_EQ(g.edges().size(), 12u);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_TRUE(g.is_connected());
  EXPECT_EQ(g.undirected_edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(g.neighbors(2), (std::vector<std::size_t>{0, 1, 3, 4}));
  EXPECT_EQ(bidirectionalize(g), g);
}

TEST(Arch, Melbourne) {
  CouplingGraph g = preset("melbourne");
  EXPECT_EQ(g.num_pqubits(), 14u);
  EXPECT_EQ(g.edges().size(), 18u);
  EXPECT_FALSE(g.is_symmetric());
  EXPECT_TRUE(g.is_connected());
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_TRUE(g.adjacent(0, 1));
  CouplingGraph b = bidirectionalize(g);
  EXPECT_EQ(b.edges().size(), 36u);
  EXPECT_TRUE(b.is_symmetric());
  // Ladder: no triangles.
  for (std::size_t a = 0; a < 14; ++a)
    for (auto x : g.neighbors(a))
      for (auto y : g.neighbors(x)) EXPECT_FALSE(y != a && g.adjacent(a, y)) << a << " " << x << " " << y;
}

TEST(Arch, Distances) {
  auto d = all_pairs_distance(preset("tenerife"));
  EXPECT_EQ(d[0][3], 2);
  EXPECT_EQ(d[3][4], 1);
  EXPECT_EQ(d[1][1], 0);
  auto m = all_pairs_distance(preset("melbourne"));
  EXPECT_EQ(m[0][7], 8);
  EXPECT_EQ(m[0][13], 2);
  CouplingGraph split(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(split.is_connected());
  EXPECT_EQ(all_pairs_distance(split)[0][3], kUnreachable);
}

TEST(Arch, LoadAndDump) {
  CouplingGraph g = load_coupling("# ring\n4\n0 1\n1 2 # comment\n\n2 3\n3 0\n0 1\n", "ring");
  EXPECT_EQ(g.num_pqubits(), 4u);
  EXPECT_EQ(g.edges().size(), 4u);
  EXPECT_EQ(g.name(), "ring");
  EXPECT_EQ(load_coupling(dump_coupling(g)), g);
  EXPECT_EQ(load_coupling(dump_coupling(preset("melbourne"))), preset("melbourne"));
}

TEST(Arch, LoadErrors) {
  auto message = [](const std::string& text) {
    try {
      load_coupling(text);
    } catch (const CouplingError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("3\n0 3\n"), "line 2: edge endpoint out of range (3 qubits)");
  EXPECT_EQ(message("3\n1 1\n"), "line 2: self-loop on physical qubit 1");
  EXPECT_EQ(message("3\n0 x\n"), "line 2: expected non-negative integers, got 'x'");
  EXPECT_EQ(message("3\n0 1 2\n"), "line 2: expected an edge 'a b'");
  EXPECT_EQ(message("0 1\n"), "line 1: expected the number of physical qubits");
  EXPECT_EQ(message("# nothing\n"), "empty coupling file");
  EXPECT_THROW(CouplingGraph(2, {{0, 2}}), CouplingError);
  EXPECT_THROW(CouplingGraph(2, {{1, 1}}), CouplingError);
  EXPECT_THROW(preset("nowhere"), CouplingError);
}
