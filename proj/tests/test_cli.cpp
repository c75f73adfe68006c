#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = triolab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST(Cli, ClassifyPureBeat) {
  const auto r = run({"classify", "--group", "C6", "--a", "0,3", "--b", "0,1,3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["certificate"]["tag"], "PureBeat");
  EXPECT_EQ(j["certificate"]["delta"], 2);
  EXPECT_EQ(j["certificate"]["witness"]["H"], json::array({0, 3}));
  EXPECT_TRUE(j["verified"]);
  EXPECT_EQ(j["song"]["steps"].size(), 1u);
}

TEST(Cli, ClassifyByElementNames) {
  const auto r = run({"classify", "--group", "D6", "--a", "1,r", "--b", "1,f"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["schema_version"], 1);
}

TEST(Cli, ClassifyTableGroup) {
  const std::string table = R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})";
  const auto r = run({"classify", "--group", table, "--a", "0", "--b", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["certificate"]["tag"], "PureBeat");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "C6"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "Z9", "--a", "0", "--b", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "C6", "--a", "7", "--b", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "cauchy-davenport", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"--workers", "0", "verify", "--suite", "vosper"}).code, 2);
  EXPECT_EQ(run({"cuts", "--graph", "Nothing"}).code, 2);
}

TEST(Cli, CapOverride) {
  EXPECT_EQ(run({"sweep", "--max-order", "60"}).code, 2);
  ::setenv("TRIOLAB_MAX_ORDER", "4", 1);
  EXPECT_EQ(run({"sweep", "--max-order", "6"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "C6", "--a", "0", "--b", "0"}).code, 2);
  ::unsetenv("TRIOLAB_MAX_ORDER");
}

TEST(Cli, VerifySuites) {
  const auto r = run({"verify", "--suite", "cauchy-davenport", "--p", "7"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["results"][0]["pass"]);
}

TEST(Cli, CutsPetersen) {
  const auto r = run({"cuts", "--graph", "Petersen"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["matches_frozen"]);
  EXPECT_EQ(j["counts"]["shortest-cycle"], 12);
}

TEST(Cli, VideoAndReport) {
  auto r = run({"video", "--kind", "EVE", "--graph", "Cube"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["delta"], 4);
  r = run({"report", "--kind", "weak-structure", "--group", "C6", "--a", "0,1", "--b", "0,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["report"]["outcome"], "2b");
  r = run({"report", "--kind", "bogus", "--group", "C6", "--a", "0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, TextFormat) {
  const auto r = run({"--format", "text", "classify", "--group", "C6", "--a", "0,3", "--b", "0,1,3,4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("schema_version: 1"), std::string::npos);
  EXPECT_NE(r.out.find("PureBeat"), std::string::npos);
}

TEST(Cli, DeterministicAcrossRunsAndWorkers) {
  const auto a = run({"--workers", "1", "sweep", "--max-order", "8"});
  const auto b = run({"--workers", "1", "sweep", "--max-order", "8"});
  const auto c = run({"--workers", "3", "sweep", "--max-order", "8"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto v1 = run({"--seed", "5", "verify", "--suite", "incidence", "--cases", "200"});
  const auto v2 = run({"--seed", "5", "verify", "--suite", "incidence", "--cases", "200"});
  EXPECT_EQ(v1.out, v2.out);
}
