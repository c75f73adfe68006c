#include <gtest/gtest.h>

#include <cstdlib>

#include "oracle.hpp"
#include "triolab/group.hpp"

using namespace triolab;

TEST(Group, TrivialGroup) {
  const auto g = cyclic_group(1);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.table(), std::vector<std::vector<int>>{{0}});
}

TEST(Group, DihedralThreeHasThreeInvolutions) {
  const auto g = dihedral_group(3);
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
  int involutions = 0;
  for (int a = 1; a < 6; ++a) {
    int k = 1, x = a;
    while (x != 0) x = g.mul(x, a), ++k;
    involutions += k == 2;
  }
  EXPECT_EQ(involutions, 3);
}

TEST(Group, ProductOrder48) { EXPECT_EQ(parse_group("C2xS4").order(), 48); }

TEST(Group, CatalogAxioms) {
  for (const auto& name : catalog_upto16()) {
    const auto g = parse_group(name);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(g.mul(0, a), a);
      EXPECT_EQ(g.mul(a, g.inv(a)), 0);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << name;
    }
  }
}

TEST(Group, CatalogOrdersAreDistinctUpToCensus) {
  std::map<std::pair<int, std::vector<int>>, int> seen;
  for (const auto& name : catalog_upto12()) {
    const auto g = parse_group(name);
    ++seen[{g.order(), order_census(g)}];
  }
  // order 12 contains two groups sharing a census would show up as 2; none do here
  for (const auto& [k, v] : seen) EXPECT_EQ(v, 1);
  EXPECT_EQ(catalog_upto12().size(), 24u);
}

TEST(Subgroups, CyclicSix) {
  const auto s = subgroups(cyclic_group(6));
  ASSERT_EQ(s.size(), 4u);
  std::vector<int> orders;
  for (const auto& h : s) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<int>{1, 2, 3, 6}));
}

TEST(Subgroups, MatchNaiveOracle) {
  for (const auto& name : catalog_upto12()) {
    const auto g = parse_group(name);
    std::vector<Mask> got;
    for (const auto& h : subgroups(g)) got.push_back(h.mask);
    auto want = oracle::subgroups(g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << name;
  }
}

TEST(Subgroups, Frozen) {
  // brute-force closure counts
  EXPECT_EQ(subgroups(dihedral_group(4)).size(), 10u);
  EXPECT_EQ(subgroups(cyclic_group(1)).size(), 1u);
  EXPECT_EQ(subgroups(parse_group("Q8")).size(), 6u);
  EXPECT_EQ(subgroups(parse_group("A4")).size(), 10u);
  EXPECT_EQ(subgroups(parse_group("S4")).size(), 30u);
}

TEST(Subgroups, SortedAndDividing) {
  const auto g = parse_group("D6");
  const auto s = subgroups(g);
  for (size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(g.order() % s[i].order(), 0);
    EXPECT_EQ(g.product(s[i].mask, s[i].mask), s[i].mask);
    if (i) EXPECT_TRUE(s[i - 1].order() < s[i].order() || (s[i - 1].order() == s[i].order() && s[i - 1].mask < s[i].mask));
  }
}

TEST(Predicates, Normality) {
  const auto c6 = cyclic_group(6);
  const auto h = make_subgroup(c6, 0b1001);
  const auto p = subgroup_predicates(c6, h, 2);
  EXPECT_TRUE(p.is_normal);
  EXPECT_EQ(p.conjugate.mask, h.mask);
  const auto d3 = dihedral_group(3);
  const Mask flip = 1 | oracle::element(d3, "f");
  EXPECT_FALSE(subgroup_predicates(d3, make_subgroup(d3, flip), 1).is_normal);
  const Mask rot = 1 | oracle::element(d3, "r") | oracle::element(d3, "r^2");
  const auto pr = subgroup_predicates(d3, make_subgroup(d3, rot), 3);
  EXPECT_TRUE(pr.is_normal);
  EXPECT_EQ(pr.left_cosets.size(), 2u);
}

TEST(Quotient, Examples) {
  const auto c6 = cyclic_group(6);
  const auto q = quotient(c6, make_subgroup(c6, 0b1001));
  EXPECT_EQ(q.image.order(), 3);
  EXPECT_TRUE(is_cyclic(q.image));
  const auto d6 = dihedral_group(6);
  Mask center = 0;
  for (int z = 0; z < 12; ++z) {
    bool central = true;
    for (int a = 0; a < 12; ++a) central = central && d6.mul(z, a) == d6.mul(a, z);
    if (central) center |= bit(z);
  }
  ASSERT_EQ(popcount(center), 2);
  const auto qd = quotient(d6, make_subgroup(d6, center));
  EXPECT_EQ(qd.image.order(), 6);
  const auto whole = quotient(c6, make_subgroup(c6, c6.full()));
  EXPECT_EQ(whole.image.order(), 1);
}

TEST(Quotient, ProjectionIsHomomorphism) {
  const auto g = parse_group("A4");
  for (const auto& h : normal_subgroups(g)) {
    const auto q = quotient(g, h);
    EXPECT_EQ(q.image.order() * h.order(), g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        EXPECT_EQ(q.projection[g.mul(a, b)], q.image.mul(q.projection[a], q.projection[b]));
  }
}

TEST(Cap, EnvironmentOverride) {
  ::setenv("TRIOLAB_MAX_ORDER", "20", 1);
  EXPECT_EQ(max_order_cap(), 20);
  ::unsetenv("TRIOLAB_MAX_ORDER");
  EXPECT_EQ(max_order_cap(), 48);
}

TEST(Parse, RejectsGarbage) {
  EXPECT_THROW(parse_group("X9"), GroupError);
  EXPECT_THROW(parse_group(""), GroupError);
}
