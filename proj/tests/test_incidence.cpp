#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "triolab/graphs.hpp"
#include "triolab/incidence.hpp"
#include "triolab/suites.hpp"

using namespace triolab;

namespace {
Mask m(std::initializer_list<int> xs) { return mask_of(std::vector<int>(xs)); }
}  // namespace

TEST(Chorus, MatchingDuet) {
  const auto g = cyclic_group(4);
  const auto c = cayley_duet(g, m({0}));
  const auto w = weights(c, 0, 1);
  EXPECT_EQ(w.d, 1);
  EXPECT_EQ(w.w, w.point_y);
}

TEST(Chorus, IntervalDuetWeights) {
  const auto c = cayley_duet(cyclic_group(6), m({0, 1}));
  const auto w = weights(c, 0, 1);
  EXPECT_EQ(w.w, 2);
  EXPECT_EQ(w.wbar, 4);
}

TEST(Chorus, CubeWeights) {
  const auto d = graph_duet(named_graph("Cube"), "V", "E");
  const auto w = weights(d.chorus, 0, 1);
  EXPECT_EQ(w.point_x, 6);
  EXPECT_EQ(w.point_y, 4);
  EXPECT_EQ(w.w, 12);
}

TEST(Chorus, BeatDeficiencyBothSides) {
  const auto g = cyclic_group(6);
  const auto c = cayley_trio(g, m({0, 3}), m({0, 1, 3, 4}), m({1, 4}));
  EXPECT_FALSE(find_collision(c, 0, 1, 2));
  EXPECT_EQ(trio_deficiency_inc(c, 0, 1, 2), 2);
}

TEST(Chorus, Connectivity) {
  for (const char* name : {"C6", "D4", "C2xC4"}) {
    const auto g = parse_group(name);
    for (Mask a = 1; a <= g.full(); ++a) {
      bool in_coset = false;
      for (const auto& h : subgroups(g))
        if (h.order() < g.order())
          for (int x = 0; x < g.order(); ++x) in_coset = in_coset || (a & ~g.left(x, h.mask)) == 0;
      EXPECT_EQ(connected_pair(cayley_duet(g, a), 0, 1), !in_coset) << name << " " << a;
    }
  }
}

TEST(Chorus, CloneQuotient) {
  const auto g = cyclic_group(6);
  const auto q = clone_quotient(cayley_duet(g, m({0, 1, 3, 4})));
  EXPECT_EQ(q.quotient.sizes[0], 3);
  const auto id = clone_quotient(cayley_duet(g, m({0, 1})));
  EXPECT_EQ(id.quotient.sizes, (std::vector<int>{6, 6}));
  const auto cube = build_exceptional_video(VideoKind::CubeOct_VEF);
  const auto cq = clone_quotient(cube.chorus);
  EXPECT_EQ(cq.quotient.sizes, (std::vector<int>{8, 12, 6}));
}

TEST(Hamidoune, Examples) {
  const auto c = cayley_duet(cyclic_group(6), m({0, 1}));
  const auto t = hamidoune_block(c, 0, 1);
  ASSERT_TRUE(t);
  EXPECT_EQ(popcount(t->block), 1);
  EXPECT_EQ(t->deficiency, 1);
  const auto d = cayley_duet(cyclic_group(6), m({0, 3}));
  const auto u = hamidoune_block(d, 0, 1);
  ASSERT_TRUE(u);
  EXPECT_EQ(t->deficiency, duet_deficiency(c, 0, 1));
  EXPECT_EQ(popcount(u->block) % 2, 0);
}

TEST(BlockClosure, Example) {
  const auto c = cayley_duet(cyclic_group(6), m({0, 1}));
  EXPECT_EQ(block_closure(c, 1, m({0, 2})), m({0, 2, 4}));
  EXPECT_EQ(block_closure(c, 1, m({0, 1})), c.all(1));
}

TEST(Uncross, IdentityOnIntervalDuet) {
  const auto c = cayley_duet(cyclic_group(8), m({0, 1, 2}));
  std::mt19937_64 rng(17);
  int tested = 0;
  for (int i = 0; i < 2000 && tested < 200; ++i) {
    const Mask a = rng() & c.all(0) & rng(), a2 = rng() & c.all(0) & rng();
    const Cross p{a, c.all(1) & ~c.neighbourhood(0, a, 1) & rng()};
    const Cross q{a2, c.all(1) & ~c.neighbourhood(0, a2, 1)};
    if (!is_cross(c, 0, 1, p) || !is_cross(c, 0, 1, q)) continue;
    ++tested;
    const auto [x, y] = uncross(p, q);
    EXPECT_EQ(cross_deficiency(c, 0, 1, x) + cross_deficiency(c, 0, 1, y),
              cross_deficiency(c, 0, 1, p) + cross_deficiency(c, 0, 1, q));
  }
  EXPECT_GT(tested, 0);
}

TEST(Sabidussi, ShiftedBasepoints) {
  const auto g = cyclic_group(4);
  const auto c = cayley_duet(g, m({0, 1}));
  const auto act = cayley_element_action(g, 2);
  const auto r = sabidussi_realize(g, act, c, {0, 0});
  EXPECT_TRUE(r.strong_isomorphism);
  EXPECT_EQ(r.matrix[0][1], m({0, 1}));
  // basepoints x = 1 in the first set and y = 0 in the second give x A y^-1
  const auto s = sabidussi_realize(g, act, c, {1, 0});
  EXPECT_TRUE(s.strong_isomorphism);
  EXPECT_EQ(s.matrix[0][1], m({1, 2}));
}

TEST(Identities, RandomizedSuiteSmall) {
  SuiteOptions opt;
  opt.cases = 500;
  const auto r = run_suite("incidence", opt);
  EXPECT_TRUE(r.pass) << r.detail;
}
