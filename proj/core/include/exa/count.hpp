#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "exa/graph.hpp"

namespace exa {

using Count = std::uint64_t;

inline constexpr Count kNoLimit = std::numeric_limits<Count>::max();

// F restricted to its vertices of positive degree, relabeled in order.
Graph strip_isolated(const Graph& f);

// A pattern graph prepared for repeated embedding searches. The graph is used
// as given; callers that count copies strip isolated vertices first.
//
// Pattern vertices are matched in a fixed order: highest degree first, then
// repeatedly the vertex with the most already-matched neighbours (ties by
// degree, then by label).
class Pattern {
 public:
  explicit Pattern(Graph g);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  int edge_count() const { return edges_; }
  Count automorphisms() const { return automorphisms_; }

  // Injective maps V(F) -> V(H) sending edges to edges. Stops early and
  // returns some value > cap once the count exceeds cap.
  Count embeddings(const Graph& host, Count cap = kNoLimit) const;

  // Number of edge subsets of host isomorphic to the pattern. When the count
  // exceeds limit, returns limit + 1 without finishing the search.
  Count copies(const Graph& host, Count limit = kNoLimit) const;

  // Calls visit with image[v] for each pattern vertex v; returning false stops
  // the enumeration.
  void for_each_embedding(const Graph& host,
                          const std::function<bool(std::span<const int>)>& visit) const;

 private:
  struct Search;
  friend bool are_isomorphic(const Graph& a, const Graph& b);

  Pattern(Graph g, bool count_automorphisms);

  Graph graph_;
  int edges_ = 0;
  std::vector<int> sequence_;
  // For each search position, the earlier positions adjacent to it.
  std::vector<std::vector<int>> back_;
  std::vector<int> degree_at_;
  Count automorphisms_ = 1;
};

// |Aut(F)|. Orders above 10 are rejected.
Count automorphism_count(const Graph& f);

// N(H, F): copies of F in H, isolated vertices of F ignored.
Count count_copies(const Graph& host, const Graph& pattern);

bool are_isomorphic(const Graph& a, const Graph& b);

// Lexicographically smallest edge mask over all relabelings. Orders up to 8.
std::uint64_t canonical_mask(const Graph& g);

}  // namespace exa
