#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "triolab/setops.hpp"

using namespace triolab;

namespace {
Mask m(std::initializer_list<int> xs) { return mask_of(std::vector<int>(xs)); }
}  // namespace

TEST(Products, Examples) {
  const auto c5 = cyclic_group(5), c6 = cyclic_group(6);
  EXPECT_EQ(c5.product(m({0, 1}), m({0, 1})), m({0, 1, 2}));
  EXPECT_EQ(c6.product(m({0, 3}), m({0, 1, 3, 4})), m({0, 1, 3, 4}));
  EXPECT_EQ(c6.product(m({0, 3}), 0), 0u);
}

TEST(Products, MatchOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (const auto& name : catalog_upto16()) {
    const auto g = parse_group(name);
    for (int i = 0; i < 200; ++i) {
      const Mask a = rng() & g.full(), b = rng() & g.full();
      ASSERT_EQ(g.product(a, b), oracle::product(g, a, b)) << name;
      ASSERT_EQ(g.inverse(a), oracle::inverse(g, a));
      ASSERT_EQ(complete_third(g, a, b), oracle::third(g, a, b));
      if (a) ASSERT_EQ(stab_left(g, a), oracle::stab_left(g, a));
    }
  }
}

TEST(Deficiency, Examples) {
  EXPECT_EQ(deficiency_pair(cyclic_group(5), m({0, 1}), m({0, 1})), 1);
  EXPECT_EQ(deficiency_pair(cyclic_group(6), m({0, 3}), m({0, 1, 3, 4})), 2);
  const auto c7 = cyclic_group(7);
  const Mask a = m({0, 1, 2}), b = m({0, 2, 4});
  EXPECT_EQ(deficiency_pair(c7, a, b), 6 - oracle::size(oracle::product(c7, a, b)));
  EXPECT_THROW(deficiency_pair(c7, 0, b), GroupError);
}

TEST(Trio, FromPair) {
  const auto c5 = cyclic_group(5);
  auto t = trio_from_pair(c5, m({0, 1, 2}), m({0, 1}));
  EXPECT_EQ(t.sets.c, m({1}));
  EXPECT_EQ(t.deficiency, 1);
  const auto c6 = cyclic_group(6);
  t = trio_from_pair(c6, m({0, 3}), m({0, 1, 3, 4}));
  EXPECT_EQ(t.sets.c, m({1, 4}));
  EXPECT_EQ(t.deficiency, 2);
  t = trio_from_pair(c6, m({0, 1, 2}), m({0, 1, 2, 3}));
  EXPECT_EQ(t.sets.c, 0u);
  EXPECT_TRUE(is_trivial(t.sets));
}

TEST(Trio, CloseReachesFixpoint) {
  const auto c6 = cyclic_group(6);
  const Trio beat{m({0, 3}), m({0, 1, 3, 4}), m({1, 4})};
  EXPECT_TRUE(oracle::maximal(c6, beat));
  EXPECT_EQ(trio_close(c6, beat), beat);
  std::mt19937_64 rng(11);
  for (const auto& name : catalog_upto12()) {
    const auto g = parse_group(name);
    for (int i = 0; i < 100; ++i) {
      const Mask a = rng() & g.full(), b = rng() & g.full();
      const Trio seed{a, b, complete_third(g, a, b) & rng()};
      const Trio t = trio_close(g, seed);
      ASSERT_TRUE(oracle::maximal(g, t)) << name;
      ASSERT_EQ(t.a & seed.a, seed.a);
      ASSERT_EQ(t.b & seed.b, seed.b);
      ASSERT_EQ(t.c & seed.c, seed.c);
    }
  }
}

TEST(Similarity, CanonicalFormIsOrbitInvariant) {
  const auto c6 = cyclic_group(6);
  const Trio beat{m({0, 3}), m({0, 1, 3, 4}), m({1, 4})};
  const Trio rotated{beat.b, beat.c, beat.a};
  const Trio shifted{c6.right(beat.a, 2), c6.left(c6.inv(2), beat.b), beat.c};
  const auto base = similarity_canonical(c6, beat).trio;
  EXPECT_EQ(similarity_canonical(c6, rotated).trio, base);
  EXPECT_EQ(similarity_canonical(c6, shifted).trio, base);
  const auto c = similarity_canonical(c6, beat);
  EXPECT_EQ(apply_transform(c6, beat, c.transform), c.trio);
  const Trio other{m({0}), m({0}), m({1, 2, 3, 4, 5})};
  EXPECT_NE(similarity_canonical(c6, other).trio, base);
}

TEST(Similarity, CanonicalIsMinimumOfBfsOrbit) {
  std::mt19937_64 rng(3);
  for (const char* name : {"C6", "D3", "C2xC4", "Q8", "D4"}) {
    const auto g = parse_group(name);
    for (int i = 0; i < 30; ++i) {
      const Mask a = (rng() & g.full()) | 1, b = (rng() & g.full()) | 1;
      const Trio t = trio_close(g, {a, b, complete_third(g, a, b)});
      const auto orbit = similarity_orbit_bfs(g, t);
      EXPECT_EQ(*orbit.begin(), similarity_canonical(g, t).trio);
      for (const auto& u : orbit) ASSERT_EQ(oracle::deficiency(g, u), oracle::deficiency(g, t));
    }
  }
}

TEST(Stabilizers, Examples) {
  const auto c6 = cyclic_group(6);
  EXPECT_EQ(stabilizers(c6, m({0, 1, 3, 4})).first.mask, m({0, 3}));
  const auto st = stabilizers(c6, c6.full());
  EXPECT_EQ(st.first.mask, c6.full());
  EXPECT_EQ(st.second.mask, c6.full());
  const auto d6 = dihedral_group(6);
  const int r = oracle::index(d6, "r"), f = oracle::index(d6, "f");
  const Mask a = d6.product(bit(0) | bit(r), bit(0) | bit(f));
  EXPECT_EQ(stab_right(d6, a), bit(0) | bit(f));
}

TEST(RepMin, Examples) {
  const auto c6 = cyclic_group(6), c5 = cyclic_group(5);
  EXPECT_EQ(rep_min(c6, m({0, 1}), m({0, 1})), 1);
  EXPECT_EQ(rep_min(c6, m({4}), m({0, 2, 5})), 1);
  EXPECT_GE(rep_min(c5, m({0, 1, 2}), m({0, 1})), 1);
}

TEST(CosetEnvelope, Examples) {
  const auto c6 = cyclic_group(6);
  EXPECT_EQ(coset_envelope(c6, m({3})).h.mask, 1u);
  const auto e = coset_envelope(c6, m({0, 2}));
  EXPECT_EQ(e.h.mask, m({0, 2, 4}));
  EXPECT_EQ(e.x, 0);
  EXPECT_EQ(coset_envelope(c6, m({0, 1})).h.mask, c6.full());
}

TEST(ConjStable, Examples) {
  const auto c6 = cyclic_group(6);
  EXPECT_TRUE(conj_stable(c6, m({0, 1}), 1));
  EXPECT_TRUE(conj_stable(c6, m({0, 1, 3, 4}), m({0, 3})));
  EXPECT_FALSE(conj_stable(c6, m({0, 1}), m({0, 3})));
}

// Uncrossing for subset trios sharing C, with the second pair shifted by g.
TEST(Properties, SupermodularUncrossing) {
  std::mt19937_64 rng(5);
  for (const auto& name : catalog_upto12()) {
    const auto g = parse_group(name);
    for (int i = 0; i < 200; ++i) {
      const Mask a = rng() & g.full(), b = rng() & g.full();
      if (!a || !b) continue;
      const Mask c = complete_third(g, a, b);
      const int x = static_cast<int>(rng() % g.order());
      const Mask a2 = g.right(a, x), b2 = g.left(g.inv(x), b);
      auto d = [&](Mask p, Mask q) { return popcount(p) + popcount(q) + popcount(c) - g.order(); };
      ASSERT_EQ(d(a & a2, b | b2) + d(a | a2, b & b2), d(a, b) + d(a2, b2)) << name;
      ASSERT_EQ(g.product(g.product(a & a2, b | b2), c) & 1, 0u);
    }
  }
}

TEST(Properties, DeficiencyInvariantUnderTransforms) {
  std::mt19937_64 rng(9);
  for (const char* name : {"C8", "D4", "Q8", "C2xC2xC2"}) {
    const auto g = parse_group(name);
    for (int i = 0; i < 50; ++i) {
      const Mask a = rng() & g.full(), b = rng() & g.full();
      const Trio t{a, b, complete_third(g, a, b)};
      for (int p = 0; p < 6; ++p)
        for (int x = 0; x < g.order(); ++x) {
          const Transform tr{p, x, static_cast<int>(rng() % g.order()), static_cast<int>(rng() % g.order())};
          const Trio u = apply_transform(g, t, tr);
          ASSERT_EQ(trio_deficiency(g, u), trio_deficiency(g, t));
          ASSERT_TRUE(is_trio(g, u));
        }
    }
  }
}
