#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exa {

// Every adjacency row is one machine word.
inline constexpr int kMaxVertices = 32;

using VertexSet = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Ordered list of pairs with u < v and no duplicates.
using EdgeSet = std::vector<Edge>;

// Index of the pair {i, j} in the upper-triangle column order used by
// graph6: (0,1), (0,2), (1,2), (0,3), ...
constexpr int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Inverse of pair_index for graphs of order n.
std::vector<Edge> pair_table(int n);

// A labeled simple graph on at most kMaxVertices vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  VertexSet all_vertices() const;

  EdgeSet edges() const;

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph permuted(std::span<const int> perm) const;

  // Bit pair_index(u, v) is set iff uv is an edge. Requires order <= 11.
  std::uint64_t edge_mask() const;
  static Graph from_edge_mask(int order, std::uint64_t mask);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph make_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Part sizes of the balanced r-partition of n, larger parts first. Parts may
// be empty when r > n.
std::vector<int> balanced_parts(int n, int r);
Graph turan_graph(int n, int r);
Graph complete_multipartite(std::span<const int> part_sizes);

// Disjoint union of paths P_s, one for each size s.
Graph path_forest(std::span<const int> sizes);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// K_{1,leaves}, center is vertex 0.
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
// floor(n/2) disjoint edges on n vertices.
Graph matching_graph(int n);
// K_n with the pair {n-2, n-1} removed.
Graph complete_minus_edge(int n);

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

struct BipartiteResult {
  std::optional<Bipartition> parts;
  // Closed walk of odd length when not bipartite: consecutive entries and the
  // last/first pair are adjacent.
  std::vector<int> odd_cycle;

  explicit operator bool() const { return parts.has_value(); }
};

BipartiteResult is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace exa
