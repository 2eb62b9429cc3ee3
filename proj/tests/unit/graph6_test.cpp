#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "exa/graph6.hpp"

namespace {

using namespace exa;

// Reference strings produced by networkx.to_graph6_bytes(header=False).
TEST(Graph6, MatchesReferenceEncodings) {
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(encode_graph6(empty_graph(1)), "@");

  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(encode_graph6(petersen), "IheA@GUAo");

  const std::vector<Edge> five = {{0, 2}, {0, 4}, {1, 3}, {3, 4}};
  EXPECT_EQ(encode_graph6(make_graph(5, five)), "DQc");

  const std::vector<Edge> twelve = {{0, 11}, {3, 7}, {5, 6}, {10, 11}, {1, 2}};
  EXPECT_EQ(encode_graph6(make_graph(12, twelve)), "KG??G_????O@");

  EXPECT_EQ(encode_graph6(complete_graph(32)), "_" + std::string(82, '~') + "{");
}

TEST(Graph6, DecodesReferenceStrings) {
  EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
  EXPECT_EQ(decode_graph6("Dhc"), cycle_graph(5));
  EXPECT_EQ(decode_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
  EXPECT_EQ(decode_graph6("?"), Graph(0));
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 33);
    const Graph g = brute::random_graph(n, 0.4, rng);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph6(""), GraphError);
  EXPECT_THROW(decode_graph6("C~~"), GraphError);   // too long
  EXPECT_THROW(decode_graph6("D"), GraphError);     // too short
  EXPECT_THROW(decode_graph6("C\x20"), GraphError); // below 63
  EXPECT_THROW(decode_graph6("A~"), GraphError);    // padding bits set
  EXPECT_THROW(decode_graph6("~?@B"), GraphError);  // multi-byte order
  EXPECT_THROW(decode_graph6("`"), GraphError);     // order 33
}

}  // namespace
