#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = exa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountTriangles) {
  const Outcome r = invoke({"count", "--host", "C~", "--pattern", "Bw"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  const Outcome j = invoke({"--json", "count", "--host", "C~", "--family", "clique:3"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["copies"], 4);
}

TEST(Cli, RandomHostIsSeeded) {
  const Outcome a = invoke({"count", "--random", "9", "--family", "clique:3", "--seed", "5", "--json"});
  const Outcome b = invoke({"count", "--random", "9", "--family", "clique:3", "--seed", "5", "--json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MupCheck) {
  const Outcome r = invoke({"mup", "--a", "6", "--b", "53", "--check", "3,3/13,13,13,13,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "unique=true\n");
  const Outcome j = invoke({"mup", "--a", "2", "--b", "2", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["mup"], 3);
  EXPECT_EQ(doc["witness"], "1,1/2");
}

TEST(Cli, MupSeriesCsv) {
  const Outcome r = invoke({"mup", "--series", "--c", "1", "--n-max", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,c,mup,witness,delta_vs_formula");
}

TEST(Cli, OracleJson) {
  const Outcome r = invoke({"oracle", "exa", "--n", "5", "--k", "1", "--family", "clique:3", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], 6);
  EXPECT_TRUE(doc.contains("witness_graph6"));
  EXPECT_TRUE(doc.contains("explored"));
  EXPECT_TRUE(doc["complete"].get<bool>());
}

TEST(Cli, OracleBudgetIsUnsolved) {
  const Outcome r =
      invoke({"oracle", "ex", "--n", "8", "--family", "clique:2", "--budget", "0.01", "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["complete"].get<bool>());
}

TEST(Cli, Zeta) {
  const Outcome r = invoke({"oracle", "zeta", "--graph", "C~", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], 2);
}

TEST(Cli, Construct) {
  const Outcome r = invoke({"construct", "klikk", "--n", "7", "--r", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["actual_edges"], 11);
  EXPECT_EQ(invoke({"construct", "kab", "--a", "2", "--b", "2", "--parts", "2/2"}).code, 1);
  EXPECT_EQ(invoke({"construct", "triangle", "--n", "4", "--k", "3"}).code, 1);
}

TEST(Cli, Game) {
  const Outcome r = invoke({"game", "L", "--n", "4", "--family", "clique:3", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], 2);
  for (const char* key : {"value", "first_moves", "states_explored", "complete"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(invoke({"game", "x", "--n", "5", "--family", "trees", "--max-states", "1"}).code, 2);
}

TEST(Cli, Verify) {
  const Outcome r = invoke({"verify", "--suite", "klikk", "--n-max", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("suite klikk: passed"), std::string::npos);
  const Outcome j = invoke({"verify", "--suite", "kab", "--json", "--jobs", "2"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(j.out)["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"count", "--host", "C~", "--pattern", "Bw", "--bogus"}).code, 1);
  EXPECT_EQ(invoke({"count", "--host", "not graph6!", "--pattern", "Bw"}).code, 1);
  EXPECT_EQ(invoke({"oracle", "exa", "--n", "9", "--family", "clique:3"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, 1);
  EXPECT_EQ(invoke({"mup", "--a", "6", "--b", "6", "--check", "3,x/3,3"}).code, 1);
  EXPECT_EQ(invoke({"--jobs", "0", "verify", "--suite", "kab"}).code, 1);
}

TEST(Cli, HelpSucceeds) {
  const Outcome r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
