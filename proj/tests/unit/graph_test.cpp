#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "exa/graph.hpp"

namespace {

using namespace exa;

TEST(Graph, PairIndexFollowsColumnOrder) {
  EXPECT_EQ(pair_index(0, 1), 0);
  EXPECT_EQ(pair_index(0, 2), 1);
  EXPECT_EQ(pair_index(1, 2), 2);
  EXPECT_EQ(pair_index(0, 3), 3);
  EXPECT_EQ(pair_index(3, 0), 3);
  const auto table = pair_table(6);
  ASSERT_EQ(table.size(), 15u);
  for (int q = 0; q < 15; ++q) EXPECT_EQ(pair_index(table[q].u, table[q].v), q);
}

TEST(Graph, AddRemoveAndValidation) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(3, 1);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(g.add_edge(2, 2), GraphError);
  EXPECT_THROW(g.add_edge(0, 4), GraphError);
  EXPECT_THROW(Graph(33), GraphError);
  EXPECT_THROW(Graph(-1), GraphError);
}

TEST(Graph, EdgeMaskRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = brute::random_graph(n, 0.5, rng);
    EXPECT_EQ(Graph::from_edge_mask(n, g.edge_mask()), g);
    std::uint64_t column_order = 0;
    int bit = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if (g.has_edge(u, v)) column_order |= std::uint64_t{1} << bit;
    EXPECT_EQ(g.edge_mask(), column_order);
  }
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(complete_graph(6).edge_count(), 15);
  EXPECT_EQ(empty_graph(5).edge_count(), 0);
  EXPECT_EQ(path_graph(5).edge_count(), 4);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5);
  EXPECT_EQ(cycle_graph(5).min_degree(), 2);
  const Graph s = star_graph(4);
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.degree(0), 4);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6);
  EXPECT_EQ(matching_graph(5).edge_count(), 2);
  const Graph km = complete_minus_edge(4);
  EXPECT_EQ(km.edge_count(), 5);
  EXPECT_FALSE(km.has_edge(2, 3));
}

TEST(Graph, TuranGraphs) {
  EXPECT_EQ(balanced_parts(7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(balanced_parts(2, 4), (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(turan_graph(6, 3).edge_count(), 12);
  EXPECT_EQ(turan_graph(5, 2).edge_count(), 6);
  EXPECT_EQ(turan_graph(8, 4).edge_count(), 24);
  EXPECT_EQ(turan_graph(4, 1).edge_count(), 0);
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) {
      long expected = static_cast<long>(n) * (n - 1) / 2;
      for (int p : balanced_parts(n, r)) expected -= static_cast<long>(p) * (p - 1) / 2;
      EXPECT_EQ(turan_graph(n, r).edge_count(), expected);
    }
  EXPECT_THROW(turan_graph(3, 0), GraphError);
}

TEST(Graph, PathForestAndComplement) {
  const std::vector<int> sizes = {3, 1, 2};
  const Graph f = path_forest(sizes);
  EXPECT_EQ(f.order(), 6);
  EXPECT_EQ(f.edge_count(), 3);
  const Graph c = complement(f);
  EXPECT_EQ(c.edge_count(), 15 - 3);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) EXPECT_NE(f.has_edge(u, v), c.has_edge(u, v));
}

TEST(Graph, DisjointUnionAndPermutation) {
  const Graph g = disjoint_union(complete_graph(3), path_graph(2));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_TRUE(g.has_edge(3, 4));
  const std::vector<int> perm = {4, 3, 2, 1, 0};
  const Graph p = g.permuted(perm);
  EXPECT_TRUE(p.has_edge(0, 1));
  EXPECT_TRUE(p.has_edge(4, 2));
  EXPECT_EQ(p.edge_count(), 4);
}

TEST(Graph, Bipartiteness) {
  const BipartiteResult even = is_bipartite(cycle_graph(6));
  ASSERT_TRUE(even);
  EXPECT_EQ(even.parts->left.size(), 3u);

  const Graph odd = cycle_graph(7);
  const BipartiteResult r = is_bipartite(odd);
  ASSERT_FALSE(r);
  ASSERT_EQ(r.odd_cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
    EXPECT_TRUE(odd.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));

  EXPECT_TRUE(is_bipartite(empty_graph(4)));
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
}

TEST(Graph, BipartitenessMatchesTwoColouringSearch) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = brute::random_graph(n, 0.3, rng);
    bool colourable = false;
    for (unsigned side = 0; side < (1u << n) && !colourable; ++side) {
      bool ok = true;
      for (const Edge& e : brute::edge_list(g))
        if (((side >> e.u) & 1U) == ((side >> e.v) & 1U)) ok = false;
      colourable = ok;
    }
    EXPECT_EQ(static_cast<bool>(is_bipartite(g)), colourable);
  }
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  EXPECT_FALSE(is_connected(matching_graph(4)));
  EXPECT_TRUE(is_connected(Graph(1)));
}

}  // namespace
