#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exa/count.hpp"
#include "exa/graph.hpp"

namespace exa {

// A finite set of pattern graphs, pairwise non-isomorphic once isolated
// vertices are stripped.
class GraphFamily {
 public:
  GraphFamily() = default;
  // Strips isolated vertices; throws GraphError on members that become
  // isomorphic.
  GraphFamily(std::string name, const std::vector<Graph>& members);

  const std::string& name() const { return name_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool uniform_edge_count() const;
  int min_edge_count() const;
  int min_order() const;

  // Sum of copies over members, saturating at limit + 1.
  Count count(const Graph& host, Count limit = kNoLimit) const;

  // Index of the member with a copy in host when the family total is exactly
  // one, -1 otherwise.
  int unique_member(const Graph& host) const;

 private:
  std::string name_;
  std::vector<Pattern> patterns_;
};

// Sum over the family of N(H, F).
Count count_family(const Graph& host, const GraphFamily& family);

// All non-isomorphic trees on t vertices.
std::vector<Graph> all_trees(int t);

// All non-isomorphic graphs with at least one edge, no isolated vertices and
// at most max_order vertices (max_order <= 6).
std::vector<Graph> all_patterns(int max_order);

// Resolves a family spec for ambient order n. Specs, joined with '+':
//   star            spanning star S_n (n vertices)
//   star:R          star with R leaves
//   trees           all trees on n vertices
//   clique:R        K_R
//   matching:L      matching on L vertices
//   perfmatching    matching on n vertices (n even)
//   hamcycle        C_n
//   cycle:L, path:L C_L, P_L
//   kminus          K_n minus an edge
//   bipartite:A,B   K_{A,B}
//   g6:<text>       one graph6 pattern
//   @file           one graph6 pattern per line
GraphFamily family_from_spec(std::string_view spec, int n);

}  // namespace exa
