#include "exa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace exa {

std::vector<Edge> pair_table(int n) {
  std::vector<Edge> table;
  table.reserve(pair_count(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) table.push_back({i, j});
  return table;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices)
    throw GraphError("graph order " + std::to_string(order) +
                     " outside [0, " + std::to_string(kMaxVertices) + "]");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw GraphError("vertex out of range in pair " + to_string({u, v}) +
                     " for order " + std::to_string(order_));
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~(VertexSet{1} << v);
  adj_[v] &= ~(VertexSet{1} << u);
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v)
    best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexSet Graph::all_vertices() const {
  return order_ == kMaxVertices ? ~VertexSet{0}
                                : (VertexSet{1} << order_) - 1;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u = 0; u < order_; ++u) {
    VertexSet above = adj_[u] & ~((VertexSet{2} << u) - 1);
    while (above) {
      int v = std::countr_zero(above);
      above &= above - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_)
    throw GraphError("permutation size does not match graph order");
  Graph out(order_);
  for (const Edge& e : edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

std::uint64_t Graph::edge_mask() const {
  if (order_ > 11) throw GraphError("edge_mask requires order <= 11");
  std::uint64_t mask = 0;
  for (int j = 1; j < order_; ++j) {
    VertexSet below = adj_[j] & ((VertexSet{1} << j) - 1);
    mask |= static_cast<std::uint64_t>(below) << (j * (j - 1) / 2);
  }
  return mask;
}

Graph Graph::from_edge_mask(int order, std::uint64_t mask) {
  Graph g(order);
  for (int j = 1; j < order; ++j) {
    auto below = static_cast<VertexSet>((mask >> (j * (j - 1) / 2)) &
                                        ((std::uint64_t{1} << j) - 1));
    g.adj_[j] |= below;
    while (below) {
      int i = std::countr_zero(below);
      below &= below - 1;
      g.adj_[i] |= VertexSet{1} << j;
    }
  }
  return g;
}

Graph make_graph(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices)
    throw GraphError("disjoint union exceeds " + std::to_string(kMaxVertices) +
                     " vertices");
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  const int shift = g.order();
  for (const Edge& e : h.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

std::vector<int> balanced_parts(int n, int r) {
  if (r < 1) throw GraphError("number of parts must be positive");
  if (n < 0) throw GraphError("negative order");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  Graph g(n);
  std::vector<int> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph turan_graph(int n, int r) {
  if (r < 1 || r > n)
    throw GraphError("turan_graph requires 1 <= r <= n, got n=" +
                     std::to_string(n) + " r=" + std::to_string(r));
  return complete_multipartite(balanced_parts(n, r));
}

Graph path_forest(std::span<const int> sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s <= 0) throw GraphError("path sizes must be positive");
    n += s;
  }
  if (n > kMaxVertices) throw GraphError("path forest exceeds vertex cap");
  Graph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) g.add_edge(base + i, base + i + 1);
    base += s;
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph matching_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; i += 2) g.add_edge(i, i + 1);
  return g;
}

Graph complete_minus_edge(int n) {
  if (n < 2) throw GraphError("K_n minus an edge needs n >= 2");
  Graph g = complete_graph(n);
  g.remove_edge(n - 2, n - 1);
  return g;
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      VertexSet nb = g.neighbors(u);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          frontier.push(w);
        } else if (color[w] == color[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<int> from_u{u};
          std::vector<int> from_w{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) from_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) from_w.push_back(b = parent[b]);
          while (a != b) {
            from_u.push_back(a = parent[a]);
            from_w.push_back(b = parent[b]);
          }
          from_w.pop_back();
          BipartiteResult result;
          result.odd_cycle = std::move(from_u);
          result.odd_cycle.insert(result.odd_cycle.end(), from_w.rbegin(),
                                  from_w.rend());
          return result;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  return {std::move(parts), {}};
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

}  // namespace exa
