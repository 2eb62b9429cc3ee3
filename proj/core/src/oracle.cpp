#include "exa/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "exa/graph6.hpp"

namespace exa {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr int kMaxSlots = 55;  // C(11, 2)
constexpr std::uint64_t kPollEvery = 1024;

constexpr auto kBinomial = [] {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  for (int n = 0; n <= 64; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
  }
  return c;
}();

std::uint64_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return kBinomial[n][k];
}

// The rank-th j-subset of {0, 1, ...} in colex order.
Mask unrank_colex(std::uint64_t rank, int j) {
  Mask m = 0;
  for (int i = j; i >= 1; --i) {
    int c = i - 1;
    while (choose(c + 1, i) <= rank) ++c;
    m |= Mask{1} << c;
    rank -= choose(c, i);
  }
  return m;
}

// Gosper's hack: next integer with the same popcount.
Mask next_combination(Mask x) {
  Mask low = x & (~x + 1);
  Mask ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}

  bool passed() const { return active_ && Clock::now() >= end_; }

 private:
  bool active_;
  Clock::time_point end_;
};

// Runs fn(chunk, begin, end) over a partition of [0, total) into contiguous
// chunks, spread across jobs threads.
template <class Fn>
void for_each_chunk(std::uint64_t total, int jobs, std::size_t chunks, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      std::uint64_t begin = total * c / chunks;
      std::uint64_t end = total * (c + 1) / chunks;
      fn(c, begin, end);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(chunks)));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::size_t chunk_count(std::uint64_t total, int jobs) {
  if (jobs <= 1 || total <= 1) return 1;
  return static_cast<std::size_t>(std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 8));
}

// One level of the search: graphs on n vertices with m edges.
class Level {
 public:
  Level(int n, int m) : n_(n), slots_(pair_count(n)) {
    full_ = slots_ == 64 ? ~Mask{0} : (Mask{1} << slots_) - 1;
    complement_ = m > slots_ - m;
    bits_ = complement_ ? slots_ - m : m;
    size_ = choose(slots_, bits_);
  }

  std::uint64_t size() const { return size_; }

  // Visits graphs with ranks in [begin, end) until visit returns false.
  // Returns false if visit stopped the walk or the deadline passed.
  template <class Visit>
  bool walk(std::uint64_t begin, std::uint64_t end, const Deadline& deadline,
            std::atomic<bool>& expired, Visit&& visit) const {
    Mask x = unrank_colex(begin, bits_);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if ((rank - begin) % kPollEvery == kPollEvery - 1) {
        if (expired.load(std::memory_order_relaxed)) return false;
        if (deadline.passed()) {
          expired = true;
          return false;
        }
      }
      Graph g = Graph::from_edge_mask(n_, complement_ ? (full_ ^ x) : x);
      if (!visit(rank, g)) return false;
      if (bits_ > 0 && rank + 1 < end) x = next_combination(x);
    }
    return true;
  }

 private:
  int n_;
  int slots_;
  Mask full_ = 0;
  bool complement_ = false;
  int bits_ = 0;
  std::uint64_t size_ = 0;
};

void check_order(int n, const OracleOptions& options) {
  if (n < 0) throw GraphError("negative order");
  const int cap = options.allow_large ? 11 : 8;
  if (n > cap)
    throw GraphError("exhaustive search over order " + std::to_string(n) +
                     " exceeds the guard of " + std::to_string(cap) +
                     (options.allow_large ? "" : " (allow_large lifts it to 11)"));
  static_assert(pair_count(11) == kMaxSlots);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

OracleResult max_edges_with(int n, const GraphPredicate& pred, const OracleOptions& options) {
  check_order(n, options);
  const auto start = Clock::now();
  const Deadline deadline(options.budget_seconds);
  std::atomic<bool> expired{false};
  OracleResult result;

  for (int m = pair_count(n); m >= 0; --m) {
    const Level level(n, m);
    const std::size_t chunks = chunk_count(level.size(), options.jobs);
    std::atomic<std::size_t> best_chunk{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<std::pair<std::uint64_t, Graph>>> hits(chunks);

    for_each_chunk(level.size(), options.jobs, chunks,
                   [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
                     if (chunk > best_chunk.load()) return;
                     std::uint64_t polled = 0;
                     level.walk(begin, end, deadline, expired,
                                [&](std::uint64_t rank, const Graph& g) {
                                  if (++polled % kPollEvery == 0 && best_chunk.load() < chunk)
                                    return false;
                                  if (!pred(g)) return true;
                                  hits[chunk].emplace(rank, g);
                                  std::size_t seen = best_chunk.load();
                                  while (chunk < seen && !best_chunk.compare_exchange_weak(seen, chunk)) {
                                  }
                                  return false;
                                });
                   });

    if (expired) {
      result.complete = false;
      break;
    }
    auto first = std::find_if(hits.begin(), hits.end(), [](const auto& h) { return h.has_value(); });
    if (first == hits.end()) {
      result.explored += level.size();
      continue;
    }
    result.explored += (*first)->first + 1;
    result.value = m;
    result.witness = (*first)->second;
    break;
  }

  if (result.witness &&
      (result.witness->edge_count() != *result.value || !pred(*result.witness)))
    throw std::logic_error("oracle witness failed re-verification");
  result.elapsed_seconds = seconds_since(start);
  return result;
}

OracleResult ex_oracle(int n, const GraphFamily& family, const OracleOptions& options) {
  return max_edges_with(
      n, [&](const Graph& g) { return family.count(g, 0) == 0; }, options);
}

OracleResult exa_oracle(int n, Count k, const GraphFamily& family, const OracleOptions& options) {
  return max_edges_with(
      n, [&](const Graph& g) { return family.count(g, k) == k; }, options);
}

OracleResult exa_set_oracle(int n, std::span<const Count> allowed, const GraphFamily& family,
                            const OracleOptions& options) {
  if (allowed.empty()) throw GraphError("exa_set_oracle needs a non-empty count set");
  const Count top = *std::max_element(allowed.begin(), allowed.end());
  return max_edges_with(
      n,
      [&](const Graph& g) {
        Count c = family.count(g, top);
        return std::find(allowed.begin(), allowed.end(), c) != allowed.end();
      },
      options);
}

OracleResult exa_prime_oracle(int n, const GraphFamily& family, const OracleOptions& options) {
  check_order(n, options);
  if (family.size() == 0) throw GraphError("exa_prime_oracle needs a non-empty family");
  const auto start = Clock::now();
  const Deadline deadline(options.budget_seconds);
  std::atomic<bool> expired{false};
  const int min_edges = family.min_edge_count();
  OracleResult result;

  struct Best {
    std::optional<int> value;
    std::string g6;
    Graph graph;
    int member = -1;

    void offer(int value_in, const Graph& g, int member_in) {
      if (value && value_in < *value) return;
      std::string code = encode_graph6(g);
      if (value && value_in == *value && code >= g6) return;
      value = value_in;
      g6 = std::move(code);
      graph = g;
      member = member_in;
    }
  };
  Best best;

  for (int m = pair_count(n); m >= 0; --m) {
    if (best.value && m - min_edges < *best.value) break;
    const Level level(n, m);
    const std::size_t chunks = chunk_count(level.size(), options.jobs);
    std::vector<Best> partial(chunks);
    for_each_chunk(level.size(), options.jobs, chunks,
                   [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
                     level.walk(begin, end, deadline, expired,
                                [&](std::uint64_t, const Graph& g) {
                                  int member = family.unique_member(g);
                                  if (member >= 0)
                                    partial[chunk].offer(
                                        m - family.patterns()[member].edge_count(), g, member);
                                  return true;
                                });
                   });
    if (expired) {
      result.complete = false;
      break;
    }
    result.explored += level.size();
    for (const Best& p : partial)
      if (p.value) best.offer(*p.value, p.graph, p.member);
  }

  if (result.complete && best.value) {
    result.value = best.value;
    result.witness = best.graph;
    result.member = best.member;
    if (family.unique_member(best.graph) != best.member)
      throw std::logic_error("exa_prime witness failed re-verification");
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

ZetaResult zeta(const Graph& f) {
  const int v = f.order();
  if (v > 8) throw GraphError("zeta supports orders up to 8");
  const Pattern pattern(strip_isolated(f));
  ZetaResult best{0, disjoint_union(f, Graph(1))};
  for (VertexSet attach = 1; attach < (VertexSet{1} << v); ++attach) {
    const int z = std::popcount(attach);
    if (z <= best.value) continue;
    Graph g = disjoint_union(f, Graph(1));
    for (int u = 0; u < v; ++u)
      if ((attach >> u) & 1U) g.add_edge(u, v);
    if (pattern.copies(g, 1) == 1) best = {z, g};
  }
  return best;
}

std::string to_json(const OracleResult& result) {
  nlohmann::ordered_json doc;
  doc["value"] = result.value ? nlohmann::ordered_json(*result.value) : nullptr;
  doc["witness_graph6"] =
      result.witness ? nlohmann::ordered_json(encode_graph6(*result.witness)) : nullptr;
  doc["explored"] = result.explored;
  doc["complete"] = result.complete;
  return doc.dump();
}

}  // namespace exa
