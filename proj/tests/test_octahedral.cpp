#include <gtest/gtest.h>

#include <random>

#include "triolab/octahedral.hpp"

using namespace triolab;

TEST(OctConfig, EmptyIsValid) {
  const auto h = cyclic_group(2);
  OctConfig c;
  EXPECT_TRUE(validate_config(h, c));
  EXPECT_EQ(config_deficiency(h, c), -12);
}

TEST(OctConfig, FullIsInvalid) {
  const auto h = cyclic_group(2);
  OctConfig c;
  c.labels.fill(h.full());
  EXPECT_FALSE(validate_config(h, c));
}

TEST(OctConfig, MaximalizeEmpty) {
  for (int n : {2, 3}) {
    const auto h = cyclic_group(n);
    const auto c = maximalize_config(h, OctConfig{});
    EXPECT_TRUE(validate_config(h, c));
    EXPECT_TRUE(is_maximal_config(h, c));
    EXPECT_EQ(maximalize_config(h, c), c);
    // every single-element addition breaks validity
    for (int e = 0; e < 12; ++e)
      for (int x = 0; x < n; ++x) {
        if (has(c.labels[e], x)) continue;
        auto d = c;
        d.labels[e] |= bit(x);
        EXPECT_FALSE(validate_config(h, d));
      }
  }
}

TEST(OctConfig, ExhaustiveC2) {
  const auto h = cyclic_group(2);
  const auto all = enumerate_maximal_critical(h);
  ASSERT_FALSE(all.empty());
  std::map<std::string, int> types;
  for (const auto& c : all) {
    EXPECT_TRUE(is_maximal_config(h, c));
    EXPECT_GT(config_deficiency(h, c), 0);
    const auto k = classify_config(h, c);
    ASSERT_NE(k.type, OctType::Unclassified) << k.reason;
    std::string why;
    EXPECT_TRUE(verify_oct_classification(h, c, k, &why)) << why;
    ++types[oct_type_name(k.type)];
  }
  EXPECT_GE(types.size(), 2u);
}

TEST(OctConfig, TypeInvariantUnderSymmetries) {
  const auto h = cyclic_group(2);
  const auto syms = oct_symmetries();
  EXPECT_EQ(syms.size(), 48u);
  for (const auto& c : enumerate_maximal_critical(h)) {
    const auto t = classify_config(h, c).type;
    for (const auto& s : syms) {
      const auto d = apply_symmetry(h, c, s);
      ASSERT_TRUE(validate_config(h, d));
      ASSERT_EQ(classify_config(h, d).type, t);
    }
  }
}

TEST(OctConfig, SampledC3) {
  const auto h = cyclic_group(3);
  std::mt19937_64 rng(13);
  int critical = 0;
  for (int i = 0; i < 300; ++i) {
    OctConfig seed;
    for (auto& l : seed.labels) l = rng() & h.full() & rng();
    if (!validate_config(h, seed)) continue;
    const auto c = maximalize_config(h, seed);
    if (config_deficiency(h, c) <= 0) continue;
    ++critical;
    const auto k = classify_config(h, c);
    ASSERT_NE(k.type, OctType::Unclassified) << k.reason;
    EXPECT_TRUE(verify_oct_classification(h, c, k));
  }
  EXPECT_GT(critical, 0);
}

TEST(OctChorus, MatchesConfiguration) {
  const auto h = cyclic_group(2);
  EXPECT_EQ(to_cayley_oct_chorus(h, OctConfig{}).incidences(0, 1), 0);
  for (const auto& c : enumerate_maximal_critical(h)) {
    const auto ch = to_cayley_oct_chorus(h, c);
    EXPECT_NO_THROW(validate_chorus(ch));
    EXPECT_EQ(oct_chorus_deficiency(ch), config_deficiency(h, c));
    EXPECT_TRUE(oct_chorus_maximal_by_probes(ch));
  }
}
