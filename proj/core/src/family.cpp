#include "exa/family.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "exa/graph6.hpp"

namespace exa {

GraphFamily::GraphFamily(std::string name, const std::vector<Graph>& members)
    : name_(std::move(name)) {
  std::vector<Graph> stripped;
  for (const Graph& m : members) {
    Graph s = strip_isolated(m);
    for (const Graph& seen : stripped)
      if (are_isomorphic(seen, s))
        throw GraphError("family '" + name_ + "' lists isomorphic members");
    stripped.push_back(s);
  }
  patterns_.reserve(stripped.size());
  for (Graph& s : stripped) patterns_.emplace_back(std::move(s));
}

bool GraphFamily::uniform_edge_count() const {
  return std::all_of(patterns_.begin(), patterns_.end(), [&](const Pattern& p) {
    return p.edge_count() == patterns_.front().edge_count();
  });
}

int GraphFamily::min_edge_count() const {
  int best = patterns_.empty() ? 0 : patterns_.front().edge_count();
  for (const Pattern& p : patterns_) best = std::min(best, p.edge_count());
  return best;
}

int GraphFamily::min_order() const {
  int best = patterns_.empty() ? 0 : patterns_.front().order();
  for (const Pattern& p : patterns_) best = std::min(best, p.order());
  return best;
}

Count GraphFamily::count(const Graph& host, Count limit) const {
  Count total = 0;
  for (const Pattern& p : patterns_) {
    Count remaining = limit == kNoLimit ? kNoLimit : limit - total;
    total += p.copies(host, remaining);
    if (limit != kNoLimit && total > limit) return limit + 1;
  }
  return total;
}

int GraphFamily::unique_member(const Graph& host) const {
  int member = -1;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    Count c = patterns_[i].copies(host, 1);
    if (c == 0) continue;
    if (c > 1 || member != -1) return -1;
    member = static_cast<int>(i);
  }
  return member;
}

Count count_family(const Graph& host, const GraphFamily& family) {
  return family.count(host);
}

namespace {

// Rooted AHU code of the subtree at v.
std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  VertexSet nb = t.neighbors(v);
  while (nb) {
    int w = std::countr_zero(nb);
    nb &= nb - 1;
    if (w != parent) children.push_back(rooted_code(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  return out + ")";
}

std::string tree_code(const Graph& t) {
  const int n = t.order();
  if (n <= 2) return std::string(n, '.');
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::vector<bool> removed(n, false);
  int remaining = n;
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      VertexSet nb = t.neighbors(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    std::string code = rooted_code(t, v, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
  Graph t(n);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        t.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u == -1) {
      u = v;
    } else {
      t.add_edge(u, v);
      break;
    }
  }
  return t;
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw GraphError("bad integer '" + std::string(text) + "' in family spec '" +
                     std::string(spec) + "'");
  return value;
}

void append_member(std::string_view atom, int n, std::vector<Graph>& out) {
  auto colon = atom.find(':');
  std::string_view head = atom.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{}
                                                         : atom.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw GraphError("family spec '" + std::string(atom) + "' needs an argument");
    return parse_int(arg, atom);
  };

  if (!atom.empty() && atom.front() == '@') {
    std::ifstream in{std::string(atom.substr(1))};
    if (!in) throw GraphError("cannot open family file '" + std::string(atom.substr(1)) + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#') continue;
      out.push_back(decode_graph6(line));
    }
  } else if (head == "star") {
    out.push_back(arg.empty() ? star_graph(n - 1) : star_graph(need_arg()));
  } else if (head == "trees") {
    for (Graph& t : all_trees(n)) out.push_back(std::move(t));
  } else if (head == "clique") {
    out.push_back(complete_graph(need_arg()));
  } else if (head == "matching") {
    int l = need_arg();
    if (l % 2 != 0) throw GraphError("matching:L needs even L");
    out.push_back(matching_graph(l));
  } else if (head == "perfmatching") {
    if (n % 2 != 0) throw GraphError("perfmatching needs even n");
    out.push_back(matching_graph(n));
  } else if (head == "hamcycle") {
    out.push_back(cycle_graph(n));
  } else if (head == "cycle") {
    out.push_back(cycle_graph(need_arg()));
  } else if (head == "path") {
    out.push_back(path_graph(need_arg()));
  } else if (head == "kminus") {
    out.push_back(complete_minus_edge(n));
  } else if (head == "bipartite") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw GraphError("bipartite:A,B needs two sizes");
    out.push_back(complete_bipartite(parse_int(arg.substr(0, comma), atom),
                                     parse_int(arg.substr(comma + 1), atom)));
  } else if (head == "g6") {
    out.push_back(decode_graph6(arg));
  } else {
    throw GraphError("unknown family spec '" + std::string(atom) + "'");
  }
}

}  // namespace

std::vector<Graph> all_trees(int t) {
  if (t < 1) throw GraphError("trees need at least one vertex");
  if (t > 10) throw GraphError("tree generation supports up to 10 vertices");
  if (t <= 2) return {path_graph(t)};
  std::vector<Graph> out;
  std::set<std::string> seen;
  std::vector<int> seq(t - 2, 0);
  while (true) {
    Graph tree = tree_from_pruefer(seq, t);
    if (seen.insert(tree_code(tree)).second) out.push_back(std::move(tree));
    int i = t - 3;
    while (i >= 0 && ++seq[i] == t) seq[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Graph> all_patterns(int max_order) {
  if (max_order > 6) throw GraphError("all_patterns supports orders up to 6");
  std::vector<Graph> out;
  std::set<std::pair<int, std::uint64_t>> seen;
  for (int k = 2; k <= max_order; ++k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pair_count(k)); ++mask) {
      Graph g = Graph::from_edge_mask(k, mask);
      if (g.min_degree() == 0) continue;
      if (seen.insert({k, canonical_mask(g)}).second) out.push_back(g);
    }
  }
  return out;
}

GraphFamily family_from_spec(std::string_view spec, int n) {
  if (n < 1 || n > kMaxVertices) throw GraphError("ambient order out of range");
  std::vector<Graph> members;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto plus = spec.find('+', start);
    std::string_view atom = spec.substr(start, plus == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : plus - start);
    if (atom.empty()) throw GraphError("empty term in family spec '" + std::string(spec) + "'");
    append_member(atom, n, members);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return GraphFamily(std::string(spec), members);
}

}  // namespace exa
