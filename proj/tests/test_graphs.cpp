#include <gtest/gtest.h>

#include "oracle.hpp"
#include "triolab/graphs.hpp"
#include "triolab/suites.hpp"

using namespace triolab;

namespace {
// cut size by direct edge scan
int naive_cut(const Graph& g, Mask a) {
  int c = 0;
  for (auto [u, v] : g.edges) c += has(a, u) != has(a, v);
  return c;
}
}  // namespace

TEST(Graphs, Counts) {
  const auto cube = named_graph("Cube");
  EXPECT_EQ(cube.n, 8);
  EXPECT_EQ(cube.edges.size(), 12u);
  EXPECT_EQ(*regular_degree(cube), 3);
  EXPECT_EQ(face_sets(cube).front().size(), 6u);
  const auto pet = named_graph("Petersen");
  EXPECT_EQ(pet.n, 10);
  EXPECT_EQ(pet.edges.size(), 15u);
  EXPECT_EQ(girth(pet), 5);
  const auto k6 = named_graph("K6");
  EXPECT_EQ(k6.edges.size(), 15u);
  EXPECT_EQ(cycles(k6, 3).size(), 20u);
}

TEST(Graphs, Automorphisms) {
  EXPECT_EQ(graph_automorphisms(named_graph("Cube")).size(), 48u);
  EXPECT_EQ(graph_automorphisms(named_graph("Petersen")).size(), 120u);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(graph_automorphisms(cycle_graph(n)).size(), static_cast<size_t>(2 * n));
}

TEST(Graphs, LineGraphOfK4IsOctahedron) {
  EXPECT_TRUE(graph_isomorphism(line_graph(named_graph("K4")), named_graph("Octahedron")).has_value());
}

TEST(Graphs, PetersenFaceSets) {
  const auto pet = named_graph("Petersen");
  EXPECT_EQ(cycles(pet, 5).size(), 12u);
  const auto fs = face_sets(pet);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].size(), 6u);
  EXPECT_EQ(fs[1].size(), 6u);
}

TEST(Graphs, PathsInK33) {
  // a 3-vertex path is a middle vertex with an unordered pair of neighbours
  const auto g = named_graph("K33");
  EXPECT_EQ(paths(g, 3).size(), 6u * 3u);
}

TEST(Equitable, Examples) {
  const auto t = is_equitable(named_graph("K4"));
  EXPECT_EQ(t.degree, 3);
  EXPECT_EQ(t.girth, 3);
  EXPECT_EQ(t.s, 2);
  const auto p = is_equitable(named_graph("Petersen"));
  EXPECT_EQ(p.girth, 5);
  EXPECT_EQ(p.s, 4);
  EXPECT_EQ(is_equitable(named_graph("Prism")).s, -1);
}

TEST(Cuts, Examples) {
  const auto cube = named_graph("Cube");
  // a face of the cube
  const auto faces = face_sets(cube).front();
  const Mask face = faces.front().vmask;
  EXPECT_EQ(cut_size(cube, face), 4);
  EXPECT_EQ(cut_classify(cube, face), CutOutcome::ShortestCycle);
  EXPECT_EQ(cut_classify(cube, bit(3)), CutOutcome::Singleton);
  const auto k6 = named_graph("K6");
  EXPECT_EQ(cut_size(k6, 0b111), 9);
  EXPECT_EQ(cut_classify(k6, 0b111), CutOutcome::ShortestCycle);
}

TEST(Cuts, CycleGivesPaths) {
  const auto c = cycle_graph(9);
  // one or two vertices are reported by the earlier outcomes
  for (const auto& s : enumerate_small_cuts(c)) {
    const int k = popcount(s.set);
    EXPECT_EQ(s.outcome, k == 1 ? CutOutcome::Singleton : k == 2 ? CutOutcome::Edge : CutOutcome::PathInCycle);
  }
}

TEST(Cuts, EnumerationMatchesNaiveScan) {
  for (const char* name : {"Cube", "Petersen", "K33", "Octahedron"}) {
    const auto g = named_graph(name);
    const int d = *regular_degree(g);
    std::vector<Mask> want;
    for (Mask a = 1; a < bit(g.n); ++a)
      if (2 * oracle::size(a) <= g.n && naive_cut(g, a) < 2 * d) want.push_back(a);
    std::vector<Mask> got;
    for (const auto& s : enumerate_small_cuts(g)) {
      got.push_back(s.set);
      EXPECT_EQ(s.cut, naive_cut(g, s.set));
      EXPECT_NE(s.outcome, CutOutcome::None);
      EXPECT_EQ(cut_outcomes_all(g, s.set).size(), 1u);
    }
    EXPECT_EQ(got, want) << name;
  }
}

TEST(Cuts, FrozenCensus) {
  const auto& frozen = frozen_cut_census();
  for (const char* name : {"Cube", "Octahedron", "K4", "K5", "K6", "K33", "Petersen", "Icosahedron"}) {
    std::map<std::string, long> got;
    for (const auto& s : enumerate_small_cuts(named_graph(name))) ++got[cut_outcome_name(s.outcome)];
    EXPECT_EQ(got, frozen.at(name)) << name;
  }
  const std::map<std::string, long> petersen{
      {"singleton", 10}, {"edge", 15}, {"two-edge-path", 30}, {"shortest-cycle", 12}};
  EXPECT_EQ(frozen.at("Petersen"), petersen);
}
