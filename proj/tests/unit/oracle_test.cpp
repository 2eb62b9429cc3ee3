#include <gtest/gtest.h>

#include <json.hpp>

#include "brute.hpp"
#include "exa/family.hpp"
#include "exa/graph6.hpp"
#include "exa/oracle.hpp"

namespace {

using namespace exa;

GraphFamily single(const Graph& g) { return GraphFamily("f", {g}); }

bool triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.neighbors(e.u) & g.neighbors(e.v)) return false;
  return true;
}

TEST(Oracle, EngineExamples) {
  EXPECT_FALSE(max_edges_with(3, [](const Graph& g) { return g.edge_count() == 5; }).value);

  const OracleResult c4 = max_edges_with(4, triangle_free);
  EXPECT_EQ(c4.value, 4);
  ASSERT_TRUE(c4.witness);
  EXPECT_TRUE(brute::isomorphic(*c4.witness, cycle_graph(4)));

  const OracleResult c5 = max_edges_with(5, [](const Graph& g) {
    return triangle_free(g) && !is_bipartite(g);
  });
  EXPECT_EQ(c5.value, 5);
  ASSERT_TRUE(c5.witness);
  EXPECT_TRUE(brute::isomorphic(*c5.witness, cycle_graph(5)));
}

TEST(Oracle, TuranExamples) {
  EXPECT_EQ(ex_oracle(5, single(complete_graph(3))).value, 6);
  EXPECT_EQ(ex_oracle(6, single(complete_graph(4))).value, 12);
  EXPECT_EQ(ex_oracle(5, single(star_graph(3))).value, 5);
}

TEST(Oracle, ExactCountExamples) {
  EXPECT_EQ(exa_oracle(5, 1, single(complete_graph(3))).value, 6);
  EXPECT_EQ(exa_oracle(6, 1, single(matching_graph(4))).value, 4);
  EXPECT_FALSE(exa_oracle(3, 5, single(complete_graph(2))).value);
  EXPECT_EQ(exa_oracle(4, 1, single(matching_graph(4))).value, 4);
  EXPECT_EQ(exa_oracle(4, 1, single(cycle_graph(4))).value, 5);
}

TEST(Oracle, CountSetExamples) {
  const GraphFamily tri = single(complete_graph(3));
  const std::vector<Count> zero_one = {0, 1};
  const std::vector<Count> zero = {0};
  const std::vector<Count> up_to_three = {0, 1, 2, 3};
  EXPECT_EQ(exa_set_oracle(5, zero_one, tri).value, 6);
  EXPECT_EQ(exa_set_oracle(4, zero, tri).value, 4);
  EXPECT_EQ(exa_set_oracle(4, up_to_three, tri).value, 5);
  EXPECT_THROW(exa_set_oracle(4, std::vector<Count>{}, tri), GraphError);
}

TEST(Oracle, PrimeExamples) {
  EXPECT_EQ(exa_prime_oracle(4, family_from_spec("trees+clique:3", 4)).value, 0);
  EXPECT_EQ(exa_prime_oracle(4, family_from_spec("kminus", 4)).value, 0);
  EXPECT_EQ(exa_prime_oracle(4, single(complete_graph(2))).value, 0);

  const OracleResult r = exa_prime_oracle(5, single(complete_graph(3)));
  ASSERT_TRUE(r.value && r.witness && r.member);
  EXPECT_EQ(*r.value, r.witness->edge_count() - 3);
  EXPECT_EQ(count_copies(*r.witness, complete_graph(3)), 1u);
}

// exa'_1 by direct enumeration, with its smallest-graph6 witness.
std::pair<std::optional<int>, std::string> brute_prime(int n, const GraphFamily& fam) {
  std::optional<int> best;
  std::string code;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
    const Graph g = brute::from_bits(n, bits);
    int member = -1;
    int total = 0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto c = brute::copies(g, fam.patterns()[i].graph());
      total += static_cast<int>(c);
      if (c == 1) member = static_cast<int>(i);
    }
    if (total != 1) continue;
    const int v = g.edge_count() - fam.patterns()[member].edge_count();
    const std::string s = encode_graph6(g);
    if (!best || v > *best || (v == *best && s < code)) {
      best = v;
      code = s;
    }
  }
  return {best, code};
}

TEST(Oracle, PrimeMatchesEnumeration) {
  for (const char* spec : {"clique:3", "path:3", "trees+clique:3", "cycle:4+star:3"}) {
    const GraphFamily fam = family_from_spec(spec, 4);
    const OracleResult r = exa_prime_oracle(4, fam);
    const auto [value, code] = brute_prime(4, fam);
    EXPECT_EQ(r.value, value) << spec;
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(encode_graph6(*r.witness), code) << spec;
  }
}

TEST(Oracle, MatchesEnumerationOnSmallOrders) {
  const std::vector<Graph> members = {
      complete_graph(3), path_graph(3),      cycle_graph(4),
      star_graph(3),     matching_graph(4),  path_graph(4),
  };
  for (int n = 3; n <= 5; ++n) {
    const int slots = n * (n - 1) / 2;
    for (const Graph& f : members) {
      std::vector<std::uint64_t> counts(std::size_t{1} << slots);
      for (std::uint64_t bits = 0; bits < counts.size(); ++bits)
        counts[bits] = brute::copies(brute::from_bits(n, bits), f);
      for (Count k = 0; k <= 3; ++k) {
        std::optional<int> expected;
        for (std::uint64_t bits = 0; bits < counts.size(); ++bits)
          if (counts[bits] == k)
            expected = std::max(expected.value_or(0), std::popcount(bits));
        const OracleResult r = exa_oracle(n, k, single(f));
        EXPECT_EQ(r.value, expected) << "n=" << n << " k=" << k << " f=" << encode_graph6(f);
        if (r.witness) {
          EXPECT_EQ(r.witness->edge_count(), *r.value);
          EXPECT_EQ(brute::copies(*r.witness, f), k);
        }
        if (k == 0) EXPECT_EQ(r.value, ex_oracle(n, single(f)).value);
      }
    }
  }
}

TEST(Oracle, CountSetIsMaxOfSingles) {
  const GraphFamily fam = family_from_spec("clique:3+cycle:4", 5);
  const std::vector<Count> allowed = {1, 3, 4};
  std::optional<int> best;
  for (Count a : allowed) {
    const auto v = exa_oracle(5, a, fam).value;
    if (v) best = std::max(best.value_or(0), *v);
  }
  EXPECT_EQ(exa_set_oracle(5, allowed, fam).value, best);
}

TEST(Oracle, ResultsIndependentOfJobs) {
  const GraphFamily tri = single(complete_graph(3));
  OracleOptions one;
  OracleOptions many;
  many.jobs = 5;
  for (Count k : {Count{1}, Count{2}, Count{3}}) {
    const OracleResult a = exa_oracle(6, k, tri, one);
    const OracleResult b = exa_oracle(6, k, tri, many);
    EXPECT_EQ(to_json(a), to_json(b));
  }
  EXPECT_EQ(to_json(exa_prime_oracle(5, family_from_spec("trees", 5), one)),
            to_json(exa_prime_oracle(5, family_from_spec("trees", 5), many)));
}

TEST(Oracle, BudgetMarksIncomplete) {
  OracleOptions tight;
  tight.budget_seconds = 0.01;
  const OracleResult r = ex_oracle(8, single(complete_graph(2)), tight);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.value);
  const auto doc = nlohmann::json::parse(to_json(r));
  EXPECT_TRUE(doc["value"].is_null());
  EXPECT_FALSE(doc["complete"].get<bool>());
}

TEST(Oracle, OrderGuard) {
  EXPECT_THROW(ex_oracle(9, single(complete_graph(3))), GraphError);
  OracleOptions large;
  large.allow_large = true;
  EXPECT_THROW(ex_oracle(12, single(complete_graph(3)), large), GraphError);
}

TEST(Oracle, JsonShape) {
  const auto doc = nlohmann::json::parse(to_json(exa_oracle(4, 1, single(cycle_graph(4)))));
  EXPECT_EQ(doc["value"], 5);
  EXPECT_EQ(doc["witness_graph6"].get<std::string>().size(), 2u);
  EXPECT_TRUE(doc["complete"].get<bool>());
  EXPECT_GT(doc["explored"].get<std::uint64_t>(), 0u);
  EXPECT_EQ(doc.size(), 4u);
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta(complete_graph(3)).value, 1);
  EXPECT_EQ(zeta(complete_graph(4)).value, 2);
  EXPECT_EQ(zeta(complete_graph(5)).value, 3);
  EXPECT_EQ(zeta(path_graph(3)).value, 0);
}

TEST(Zeta, AtLeastMinDegreeMinusOne) {
  for (const Graph& f : all_patterns(5)) {
    const ZetaResult z = zeta(f);
    EXPECT_GE(z.value, f.min_degree() - 1) << encode_graph6(f);
    EXPECT_EQ(z.witness.order(), f.order() + 1);
    EXPECT_EQ(z.witness.degree(f.order()), z.value);
    EXPECT_EQ(brute::copies(z.witness, f), 1u) << encode_graph6(f);
  }
}

}  // namespace
