#include <gtest/gtest.h>

#include "oracle.hpp"
#include "triolab/progressions.hpp"

using namespace triolab;

namespace {
Mask m(std::initializer_list<int> xs) { return mask_of(std::vector<int>(xs)); }

bool has_ratio(const std::vector<GeometricProgression>& v, int r) {
  return std::any_of(v.begin(), v.end(), [&](const auto& p) { return p.ratio == r; });
}
}  // namespace

TEST(Geometric, Interval) {
  const auto c5 = cyclic_group(5);
  const auto found = detect_geometric(c5, m({0, 1, 2}));
  EXPECT_TRUE(has_ratio(found, 1));
  EXPECT_TRUE(has_ratio(found, 4));
  for (const auto& p : found) EXPECT_EQ(geometric_set(c5, p.ratio, p.offset, p.length), m({0, 1, 2}));
}

TEST(Geometric, SubgroupIsNotProper) {
  const auto c6 = cyclic_group(6);
  for (const auto& p : detect_geometric(c6, m({0, 2, 4}))) EXPECT_NE(p.length, 3);
}

TEST(Geometric, SingletonHasEveryRatio) {
  const auto c7 = cyclic_group(7);
  const auto found = detect_geometric(c7, m({3}));
  for (int r = 1; r < 7; ++r) EXPECT_TRUE(has_ratio(found, r));
}

TEST(Dihedral, ProductLaw) {
  const auto d6 = dihedral_group(6);
  const int r = oracle::index(d6, "r"), f = oracle::index(d6, "f");
  const auto a = make_dihedral(d6, r, f, 1);
  const Mask am = dihedral_set(d6, r, f, 1);
  EXPECT_EQ(popcount(am), 4);
  const int fr = d6.mul(f, r);
  const Mask bm = dihedral_set(d6, r, fr, 1);
  const auto b = make_dihedral(d6, r, fr, 1);
  EXPECT_EQ(popcount(bm), 4);
  const auto ab = dihedral_product(d6, a, b);
  EXPECT_EQ(popcount(dihedral_set(d6, ab.ratio, ab.flip, ab.k)), 6);
  EXPECT_EQ(oracle::product(d6, am, bm), dihedral_set(d6, ab.ratio, ab.flip, ab.k));
}

TEST(Dihedral, ProductLawD8) {
  const auto d8 = dihedral_group(8);
  const int r = oracle::index(d8, "r"), f = oracle::index(d8, "f");
  const int l = 3;
  const Mask am = dihedral_set(d8, r, f, 2);
  const int fl = d8.mul(f, power(d8, r, l));
  const Mask bm = dihedral_set(d8, r, fl, l);
  EXPECT_EQ(popcount(oracle::product(d8, am, bm)), 6 + 8 - 2);
}

TEST(Dihedral, StabilizersBruteForce) {
  for (int n = 3; n <= 12; ++n) {
    const auto g = dihedral_group(n);
    const int r = oracle::index(g, "r"), f = oracle::index(g, "f");
    for (int k = 1; 2 * (k + 1) < 2 * n; ++k) {
      const Mask a = dihedral_set(g, r, f, k);
      const auto p = make_dihedral(g, r, f, k);
      if (!dihedral_proper(g, p)) continue;
      EXPECT_EQ(oracle::stab_left(g, a), bit(0) | bit(g.mul(f, power(g, r, -k)))) << n << " " << k;
      // right stabilizer via inverses
      EXPECT_EQ(oracle::stab_left(g, g.inverse(a)), bit(0) | bit(f));
    }
  }
}

TEST(Prechord, D8Excess) {
  const auto d8 = dihedral_group(8);
  const int r = oracle::index(d8, "r"), f = oracle::index(d8, "f");
  const auto a = make_dihedral(d8, r, f, 1);
  const auto b = make_dihedral(d8, r, d8.mul(f, r), 1);
  const auto pc = build_prechord(d8, a, b);
  const int cbar = 16 - popcount(pc.c);
  EXPECT_EQ(popcount(pc.a) + popcount(pc.b) - cbar, 6);
  int trivial = 0;
  for (int x : oracle::elems(pc.a))
    for (int y : oracle::elems(pc.b))
      for (int z : oracle::elems(pc.c)) trivial += d8.mul(d8.mul(x, y), z) == 0;
  EXPECT_EQ(trivial, 8);
  // x1 = a1 b1 is represented by (a1, b1) and (a2, b4)
  const int x1 = d8.mul(pc.labels[0], pc.labels[4]);
  EXPECT_EQ(d8.mul(pc.labels[1], pc.labels[7]), x1);
  int reps = 0;
  for (int x : oracle::elems(pc.a))
    for (int y : oracle::elems(pc.b)) reps += d8.mul(x, y) == x1;
  EXPECT_EQ(reps, 2);
}

TEST(Prechord, LabelsFormATension) {
  const auto d8 = dihedral_group(8);
  const int r = oracle::index(d8, "r"), f = oracle::index(d8, "f");
  const auto pc = build_prechord(d8, make_dihedral(d8, r, f, 2), make_dihedral(d8, r, d8.mul(f, r), 1));
  for (int e = 0; e < 12; ++e) {
    const int x = pc.potential[kEdgeFrom[e]], y = pc.potential[kEdgeTo[e]];
    EXPECT_EQ(pc.labels[e], d8.mul(d8.inv(x), y)) << edge_name(e);
  }
}
