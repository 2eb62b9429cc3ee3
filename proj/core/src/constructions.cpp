#include "exa/constructions.hpp"

#include <json.hpp>

#include "exa/graph6.hpp"

namespace exa {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

long turan_edges(int n, int r) {
  if (n == 0) return 0;
  long total = binom2(n);
  for (int part : balanced_parts(n, r)) total -= binom2(part);
  return total;
}

ConstructionReport finish(std::string name, Graph g, long expected_edges,
                          Count expected_copies, const Graph& pattern) {
  ConstructionReport report;
  report.name = std::move(name);
  report.expected_edges = expected_edges;
  report.actual_edges = g.edge_count();
  report.expected_copies = expected_copies;
  report.actual_copies = count_copies(g, pattern);
  report.ok = report.expected_edges == report.actual_edges &&
              report.expected_copies == report.actual_copies;
  report.graph = std::move(g);
  return report;
}

}  // namespace

ConstructionReport build_klikk(int n, int r) {
  if (r < 3 || r > n || n > kMaxVertices)
    throw GraphError("build_klikk requires 3 <= r <= n <= 32");
  Graph g(n);
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);

  // Classes V_1..V_{r-1}; class i (0-based) avoids clique vertices i and i+1.
  std::vector<int> class_of;
  const std::vector<int> sizes = balanced_parts(n - r, r - 1);
  for (int i = 0; i < r - 1; ++i) class_of.insert(class_of.end(), sizes[i], i);
  for (int a = 0; a < n - r; ++a) {
    const int va = r + a;
    for (int b = a + 1; b < n - r; ++b)
      if (class_of[a] != class_of[b]) g.add_edge(va, r + b);
    for (int c = 0; c < r; ++c)
      if (c != class_of[a] && c != class_of[a] + 1) g.add_edge(va, c);
  }

  const long expected = binom2(r) + static_cast<long>(r - 2) * (n - r) + turan_edges(n - r, r - 1);
  return finish("klikk(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")", std::move(g),
                expected, 1, complete_graph(r));
}

ConstructionReport build_triangle_k(int n, int k) {
  if (k < 1) throw GraphError("build_triangle_k requires k >= 1");
  if (n < 3 || n > kMaxVertices) throw GraphError("build_triangle_k requires 3 <= n <= 32");
  const int small = (n - 1) / 2;
  const int large = n - 1 - small;
  if (large < k)
    throw GraphError("build_triangle_k: class of size " + std::to_string(large) +
                     " cannot hold k=" + std::to_string(k) + " apex neighbours");
  Graph g(n);
  for (int x = 0; x < small; ++x)
    for (int y = small; y < n - 1; ++y) g.add_edge(x, y);
  const int apex = n - 1;
  g.add_edge(apex, 0);
  for (int i = 0; i < k; ++i) g.add_edge(apex, small + i);

  const long expected = static_cast<long>(n - 1) * (n - 1) / 4 + k + 1;
  return finish("triangle(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", std::move(g),
                expected, static_cast<Count>(k), complete_graph(3));
}

ConstructionReport build_unique_kab(int a, int b, const PartitionPair& pp) {
  if (!is_unique_partition(a, b, pp))
    throw GraphError("build_unique_kab: parts do not form a unique partition of (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
  if (a + b > kMaxVertices) throw GraphError("build_unique_kab: A+B exceeds vertex cap");
  std::vector<int> sizes = pp.parts_a;
  sizes.insert(sizes.end(), pp.parts_b.begin(), pp.parts_b.end());
  Graph g = complement(path_forest(sizes));
  const long parts = static_cast<long>(sizes.size());
  const long expected = binom2(a + b) - a - b + parts;
  return finish("kab(A=" + std::to_string(a) + ",B=" + std::to_string(b) + ")", std::move(g),
                expected, 1, complete_bipartite(a, b));
}

ConstructionReport build_star_k(int n, int r, int k) {
  if (r < 2) throw GraphError("build_star_k requires r >= 2");
  if (n % r != 0) throw GraphError("build_star_k requires r | n");
  if (k < 0 || k % 2 != 0) throw GraphError("build_star_k requires even k >= 0");
  if (n > kMaxVertices) throw GraphError("build_star_k: n exceeds vertex cap");
  const int pairs = n / (2 * r);
  if (k / 2 > pairs)
    throw GraphError("build_star_k: k/2 = " + std::to_string(k / 2) + " exceeds the " +
                     std::to_string(pairs) + " available component pairs");
  Graph g(n);
  for (int base = 0; base < n; base += r)
    for (int u = 0; u < r; ++u)
      for (int v = u + 1; v < r; ++v) g.add_edge(base + u, base + v);
  for (int i = 0; i < k / 2; ++i) g.add_edge(2 * i * r, (2 * i + 1) * r);

  const long expected = static_cast<long>(n) * (r - 1) / 2 + k / 2;
  return finish("star(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",k=" +
                    std::to_string(k) + ")",
                std::move(g), expected, static_cast<Count>(k), star_graph(r));
}

std::string to_json(const ConstructionReport& report) {
  nlohmann::ordered_json doc;
  doc["construction"] = report.name;
  doc["graph6"] = encode_graph6(report.graph);
  doc["expected_edges"] = report.expected_edges;
  doc["actual_edges"] = report.actual_edges;
  doc["expected_copies"] = report.expected_copies;
  doc["actual_copies"] = report.actual_copies;
  doc["ok"] = report.ok;
  return doc.dump();
}

}  // namespace exa
