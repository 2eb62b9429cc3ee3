#include "exa/count.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace exa {

Graph strip_isolated(const Graph& f) {
  std::vector<int> keep;
  for (int v = 0; v < f.order(); ++v)
    if (f.degree(v) > 0) keep.push_back(v);
  std::vector<int> index(f.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (const Edge& e : f.edges()) out.add_edge(index[e.u], index[e.v]);
  return out;
}

struct Pattern::Search {
  const Pattern& pattern;
  const Graph& host;
  Count cap;
  std::array<VertexSet, kMaxVertices> degree_ok{};
  std::array<int, kMaxVertices> image{};
  Count found = 0;

  // Count-only recursion; the last position is closed with a popcount.
  void count(int pos, VertexSet used) {
    VertexSet cand = candidates(pos, used);
    if (pos + 1 == pattern.order()) {
      found += static_cast<Count>(std::popcount(cand));
      return;
    }
    while (cand && found <= cap) {
      int h = std::countr_zero(cand);
      cand &= cand - 1;
      image[pos] = h;
      count(pos + 1, used | (VertexSet{1} << h));
    }
  }

  bool visit(int pos, VertexSet used, std::vector<int>& map,
             const std::function<bool(std::span<const int>)>& fn) {
    if (pos == pattern.order()) return fn(map);
    VertexSet cand = candidates(pos, used);
    while (cand) {
      int h = std::countr_zero(cand);
      cand &= cand - 1;
      image[pos] = h;
      map[pattern.sequence_[pos]] = h;
      if (!visit(pos + 1, used | (VertexSet{1} << h), map, fn)) return false;
    }
    return true;
  }

  VertexSet candidates(int pos, VertexSet used) const {
    VertexSet cand = degree_ok[pos] & ~used;
    for (int p : pattern.back_[pos]) cand &= host.neighbors(image[p]);
    return cand;
  }
};

Pattern::Pattern(Graph g) : Pattern(std::move(g), true) {}

Pattern::Pattern(Graph g, bool count_automorphisms)
    : graph_(std::move(g)), edges_(graph_.edge_count()) {
  const int k = graph_.order();
  std::vector<bool> placed(k, false);
  std::vector<int> position(k, -1);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : sequence_)
        if (graph_.has_edge(u, v)) ++links;
      if (best == -1 || links > best_links ||
          (links == best_links && graph_.degree(v) > graph_.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    position[best] = step;
    sequence_.push_back(best);
  }
  back_.resize(k);
  degree_at_.resize(k);
  for (int pos = 0; pos < k; ++pos) {
    int v = sequence_[pos];
    degree_at_[pos] = graph_.degree(v);
    for (int u = 0; u < k; ++u)
      if (graph_.has_edge(u, v) && position[u] < pos) back_[pos].push_back(position[u]);
  }
  if (count_automorphisms && k > 0) automorphisms_ = embeddings(graph_);
}

Count Pattern::embeddings(const Graph& host, Count cap) const {
  const int k = order();
  if (k == 0) return 1;
  if (k > host.order()) return 0;
  Search s{*this, host, cap};
  for (int pos = 0; pos < k; ++pos) {
    VertexSet ok = 0;
    for (int h = 0; h < host.order(); ++h)
      if (host.degree(h) >= degree_at_[pos]) ok |= VertexSet{1} << h;
    s.degree_ok[pos] = ok;
  }
  s.count(0, 0);
  return s.found;
}

Count Pattern::copies(const Graph& host, Count limit) const {
  const Count aut = automorphisms_;
  Count cap = kNoLimit;
  if (limit < kNoLimit / aut - 1) cap = (limit + 1) * aut - 1;
  Count emb = embeddings(host, cap);
  if (emb > cap) return limit + 1;
  if (emb % aut != 0)
    throw std::logic_error("embedding count not divisible by automorphism count");
  return emb / aut;
}

void Pattern::for_each_embedding(
    const Graph& host, const std::function<bool(std::span<const int>)>& visit) const {
  const int k = order();
  if (k > host.order()) return;
  Search s{*this, host, kNoLimit};
  for (int pos = 0; pos < k; ++pos) {
    VertexSet ok = 0;
    for (int h = 0; h < host.order(); ++h)
      if (host.degree(h) >= degree_at_[pos]) ok |= VertexSet{1} << h;
    s.degree_ok[pos] = ok;
  }
  std::vector<int> map(k, -1);
  s.visit(0, 0, map, visit);
}

Count automorphism_count(const Graph& f) {
  if (f.order() > 10)
    throw GraphError("automorphism_count supports orders up to 10, got " +
                     std::to_string(f.order()));
  return Pattern(f).automorphisms();
}

Count count_copies(const Graph& host, const Graph& pattern) {
  return Pattern(strip_isolated(pattern)).copies(host);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // With equal order and size, an edge-preserving injection is a bijection on
  // edges as well.
  return Pattern(a, false).embeddings(b, 0) > 0;
}

std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw GraphError("canonical_mask supports orders up to 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  const EdgeSet edges = g.edges();
  do {
    std::uint64_t mask = 0;
    for (const Edge& e : edges) mask |= std::uint64_t{1} << pair_index(perm[e.u], perm[e.v]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace exa
