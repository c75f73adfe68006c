#include <gtest/gtest.h>

#include "oracle.hpp"
#include "triolab/classify.hpp"

using namespace triolab;

namespace {
Mask m(std::initializer_list<int> xs) { return mask_of(std::vector<int>(xs)); }

const Trio kBeat{0b1001, 0b11011, 0b10010};  // C6: {0,3}, {0,1,3,4}, {1,4}
}  // namespace

TEST(Classify, PureBeatC6) {
  const auto g = cyclic_group(6);
  const auto c = classify_trio(g, kBeat);
  EXPECT_EQ(c.tag, CertTag::PureBeat);
  EXPECT_EQ(c.delta, 2);
  EXPECT_EQ(popcount(c.h), 2);
  EXPECT_TRUE(verify_certificate(g, kBeat, c).ok);
}

TEST(Classify, VosperC5) {
  const auto g = cyclic_group(5);
  const Trio t = trio_close(g, {m({0, 1, 2}), m({0, 1}), complete_third(g, m({0, 1, 2}), m({0, 1}))});
  const auto c = classify_trio(g, t);
  EXPECT_TRUE(c.tag == CertTag::PureCyclicChord || c.tag == CertTag::PureBeat);
  EXPECT_TRUE(verify_certificate(g, t, c).ok);
}

TEST(Classify, DihedralChordD6) {
  const auto g = dihedral_group(6);
  const int r = oracle::index(g, "r"), f = oracle::index(g, "f");
  const Mask a = dihedral_set(g, r, f, 1), b = dihedral_set(g, r, g.mul(f, r), 1);
  const Trio t{a, b, complete_third(g, a, b)};
  ASSERT_TRUE(oracle::maximal(g, t));
  const auto c = classify_trio(g, t);
  EXPECT_EQ(c.tag, CertTag::PureDihedralChord);
  EXPECT_EQ(c.delta, 2);
  EXPECT_TRUE(verify_certificate(g, t, c).ok);
}

TEST(Verify, WrongSubgroupIsRejected) {
  const auto g = cyclic_group(6);
  auto c = classify_trio(g, kBeat);
  c.h = m({0, 2, 4});
  const auto v = verify_certificate(g, kBeat, c);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.failed.empty());
}

TEST(Verify, WrongDeficiencyIsRejected) {
  const auto g = cyclic_group(6);
  auto c = classify_trio(g, kBeat);
  c.delta = 3;
  EXPECT_FALSE(verify_certificate(g, kBeat, c).ok);
}

TEST(Verify, NonMaximalTrioIsRejected) {
  const auto g = cyclic_group(6);
  const auto c = classify_trio(g, kBeat);
  EXPECT_FALSE(verify_certificate(g, {kBeat.a, kBeat.b, m({1})}, c).ok);
}

TEST(Census, MatchesNaiveOracle) {
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C5", "C6", "D3", "C7", "C8", "D4", "Q8", "C2xC4", "C2xC2xC2"}) {
    const auto g = parse_group(name);
    EXPECT_EQ(static_cast<int>(brute_maximal_critical_trios(g).size()), oracle::critical_classes(g)) << name;
  }
}

TEST(Census, Frozen) {
  // computed once by the naive union-find oracle above
  const std::map<std::string, int> want{{"C1", 0},  {"C2", 1},   {"C3", 1},  {"C4", 3},      {"C2xC2", 4},
                                        {"C5", 5},  {"C6", 8},   {"D3", 5},  {"C7", 15},     {"C8", 27},
                                        {"D4", 19}, {"Q8", 20},  {"C2xC4", 27}, {"C2xC2xC2", 29}};
  for (const auto& [name, n] : want)
    EXPECT_EQ(static_cast<int>(brute_maximal_critical_trios(parse_group(name)).size()), n) << name;
}

TEST(Census, EveryTrioIsMaximalCriticalAndCanonical) {
  for (const char* name : {"C6", "D3", "D4", "Q8"}) {
    const auto g = parse_group(name);
    for (const auto& t : brute_maximal_critical_trios(g)) {
      EXPECT_TRUE(oracle::maximal(g, t));
      EXPECT_GT(oracle::deficiency(g, t), 0);
      EXPECT_EQ(similarity_canonical(g, t).trio, t);
    }
  }
}

TEST(Sweep, SoundAndCompleteUpTo8) {
  for (const auto& name : catalog_upto12()) {
    const auto g = parse_group(name);
    if (g.order() > 8) continue;
    for (const auto& t : brute_maximal_critical_trios(g)) {
      const auto c = classify_trio(g, t);
      ASSERT_NE(c.tag, CertTag::Unclassified) << name << " " << c.reason;
      const auto v = verify_certificate(g, t, c);
      ASSERT_TRUE(v.ok) << name << " " << v.failed;
    }
  }
}

// In abelian groups there are no dihedral quotients and no videos.
TEST(Kemperman, AbelianSongsUseBeatsAndCyclicChords) {
  for (const auto& name : abelian_catalog_upto12()) {
    const auto g = parse_group(name);
    if (g.order() > 10) continue;
    for (const auto& t : brute_maximal_critical_trios(g)) {
      const auto s = song_decompose(g, t);
      ASSERT_TRUE(s.complete) << name;
      for (const auto& st : s.steps) {
        const auto tag = st.cert.tag;
        EXPECT_TRUE(tag == CertTag::PureBeat || tag == CertTag::ImpureBeat || tag == CertTag::PureCyclicChord ||
                    tag == CertTag::ImpureCyclicChord)
            << name << " " << cert_tag_name(tag);
      }
    }
  }
}

TEST(Song, DeficiencyConstantAlongSteps) {
  for (const char* name : {"C8", "C2xC4", "D4", "Q8"}) {
    const auto g = parse_group(name);
    for (const auto& t : brute_maximal_critical_trios(g)) {
      const auto s = song_decompose(g, t);
      ASSERT_FALSE(s.steps.empty());
      for (const auto& st : s.steps) EXPECT_EQ(st.cert.delta, s.steps.front().cert.delta);
    }
  }
}

TEST(Song, NestedImpureBeat) {
  // C2 x C4 with an impure beat whose continuation is a pure beat in C4
  const auto g = parse_group("C2xC4");
  int nested = 0;
  for (const auto& t : brute_maximal_critical_trios(g)) {
    const auto s = song_decompose(g, t);
    if (s.steps.size() >= 2 && s.steps.front().cert.tag == CertTag::ImpureBeat) {
      ++nested;
      EXPECT_EQ(s.steps.back().cert.tag, CertTag::PureBeat);
    }
  }
  EXPECT_GT(nested, 0);
}

TEST(Controlled, Examples) {
  const auto g = cyclic_group(6);
  const auto h = controlled_witness(g, kBeat);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->mask, m({0, 3}));
  const auto w = controlled_witness(g, {g.full(), g.full(), 0});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mask, g.full());
}

// A non-critical maximal trio is controlled by the trivial subgroup. None
// exist in C6 or D3; C2 x C4 has some.
TEST(Controlled, NonCriticalMaximalTrio) {
  for (const char* name : {"C6", "D3"}) {
    const auto g = parse_group(name);
    for (Mask a = 1; a <= g.full(); ++a)
      for (Mask b = 1; b <= g.full(); ++b) {
        const Trio t = trio_close(g, {a, b, complete_third(g, a, b)});
        if (!is_trivial(t)) ASSERT_GT(oracle::deficiency(g, t), 0) << name;
      }
  }
  const auto g = parse_group("C2xC4");
  int found = 0;
  for (Mask a = 1; a <= g.full(); ++a)
    for (Mask b = 1; b <= g.full(); ++b) {
      const Trio t = trio_close(g, {a, b, complete_third(g, a, b)});
      if (is_trivial(t) || oracle::deficiency(g, t) > 0) continue;
      ++found;
      const auto h = controlled_witness(g, t);
      ASSERT_TRUE(h);
      EXPECT_EQ(h->mask, 1u);
    }
  EXPECT_GT(found, 0);
}
