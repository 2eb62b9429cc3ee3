#pragma once

// Slow reference implementations used to cross-check the library. They share
// nothing with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "exa/graph.hpp"

namespace brute {

using exa::Edge;
using exa::Graph;

inline std::vector<Edge> pairs_of(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

inline std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

// The graph on the vertices touched by edges, relabeled in increasing order.
inline Graph touched_graph(const std::vector<Edge>& edges) {
  std::vector<int> verts;
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Graph g(static_cast<int>(verts.size()));
  auto at = [&](int x) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  for (const Edge& e : edges) g.add_edge(at(e.u), at(e.v));
  return g;
}

// Isomorphism by trying every bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (edge_list(a).size() != edge_list(b).size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Edge subsets of host isomorphic to f once isolated vertices are dropped.
inline std::uint64_t copies(const Graph& host, const Graph& f) {
  const std::vector<Edge> fe = edge_list(f);
  const Graph core = touched_graph(fe);
  const std::vector<Edge> he = edge_list(host);
  const std::size_t e = fe.size();
  if (e > he.size()) return 0;
  std::uint64_t total = 0;
  std::vector<bool> pick(he.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(e), true);
  do {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < he.size(); ++i)
      if (pick[i]) chosen.push_back(he[i]);
    if (isomorphic(touched_graph(chosen), core)) ++total;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

inline Graph from_bits(int n, std::uint64_t bits) {
  const std::vector<Edge> pairs = pairs_of(n);
  Graph g(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((bits >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
  return g;
}

// Max edge count over all labeled graphs on n vertices satisfying pred.
inline std::optional<int> max_edges(int n, const std::function<bool(const Graph&)>& pred) {
  const int slots = n * (n - 1) / 2;
  std::optional<int> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    const int m = std::popcount(bits);
    if (best && m <= *best) continue;
    if (pred(from_bits(n, bits))) best = m;
  }
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace brute
