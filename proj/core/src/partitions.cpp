#include "exa/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace exa {

namespace {

constexpr int kMaxTotal = 60;

struct Candidate {
  std::vector<int> parts;
  std::uint64_t values = 0;  // bit v set iff v occurs as a part
};

// Partitions of x into non-increasing parts, bucketed by number of parts.
std::vector<std::vector<Candidate>> partitions_by_length(int x) {
  std::vector<std::vector<Candidate>> out(x + 1);
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      Candidate c{current, 0};
      for (int p : current) c.values |= std::uint64_t{1} << p;
      out[current.size()].push_back(std::move(c));
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, x, x);
  for (auto& bucket : out)
    std::sort(bucket.begin(), bucket.end(),
              [](const Candidate& l, const Candidate& r) { return l.parts < r.parts; });
  return out;
}

// Number of index subsets of items summing to target, saturated at 3.
int subset_sum_ways(const std::vector<int>& items, int target) {
  std::vector<int> ways(target + 1, 0);
  ways[0] = 1;
  for (int item : items)
    for (int s = target; s >= item; --s) ways[s] = std::min(3, ways[s] + ways[s - item]);
  return ways[target];
}

bool unique_given_disjoint(int a, int b, const std::vector<int>& pa, const std::vector<int>& pb) {
  std::vector<int> items = pa;
  items.insert(items.end(), pb.begin(), pb.end());
  return subset_sum_ways(items, a) == (a == b ? 2 : 1);
}

std::string join(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string witness_text(const PartitionPair& pp) {
  return join(pp.parts_a) + "/" + join(pp.parts_b);
}

}  // namespace

int smallest_nondivisor(int c) {
  if (c < 1) throw std::invalid_argument("smallest_nondivisor requires c >= 1");
  int v = 2;
  while (c % v == 0) ++v;
  return v;
}

bool is_unique_partition(int a, int b, const PartitionPair& pp) {
  auto positive = [](const std::vector<int>& parts) {
    return !parts.empty() &&
           std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; });
  };
  if (!positive(pp.parts_a) || !positive(pp.parts_b))
    throw std::invalid_argument("partition parts must be non-empty lists of positive integers");
  if (std::accumulate(pp.parts_a.begin(), pp.parts_a.end(), 0) != a ||
      std::accumulate(pp.parts_b.begin(), pp.parts_b.end(), 0) != b)
    throw std::invalid_argument("partition parts do not sum to (" + std::to_string(a) + ", " +
                                std::to_string(b) + ")");
  for (int x : pp.parts_a)
    if (std::find(pp.parts_b.begin(), pp.parts_b.end(), x) != pp.parts_b.end()) return false;
  return unique_given_disjoint(a, b, pp.parts_a, pp.parts_b);
}

MupResult mup(int a, int b, const MupOptions& options) {
  if (a < 1 || b < 1) throw std::invalid_argument("mup requires A, B >= 1");
  if (a + b > kMaxTotal)
    throw BudgetExceeded("mup search is limited to A+B <= " + std::to_string(kMaxTotal));
  if (a == 1 && b == 1) return {2, {{1}, {1}}};

  const auto by_len_a = partitions_by_length(a);
  const auto by_len_b = partitions_by_length(b);
  std::uint64_t examined = 0;

  for (int t = a + b; t >= 2; --t) {
    std::vector<const Candidate*> sides_a;
    for (int la = std::max(1, t - b); la <= std::min(a, t - 1); ++la)
      for (const Candidate& c : by_len_a[la]) sides_a.push_back(&c);
    std::sort(sides_a.begin(), sides_a.end(),
              [](const Candidate* l, const Candidate* r) { return l->parts < r->parts; });
    for (const Candidate* ca : sides_a) {
      const int lb = t - static_cast<int>(ca->parts.size());
      for (const Candidate& cb : by_len_b[lb]) {
        if (++examined > options.max_candidates)
          throw BudgetExceeded("mup(" + std::to_string(a) + "," + std::to_string(b) +
                               ") exceeded its candidate budget");
        if (ca->values & cb.values) continue;
        if (unique_given_disjoint(a, b, ca->parts, cb.parts)) return {t, {ca->parts, cb.parts}};
      }
    }
  }
  throw std::logic_error("mup: no unique partition found");
}

long exa1_kab(int a, int b, const MupOptions& options) {
  const long n = a + b;
  return n * (n - 1) / 2 - a - b + mup(a, b, options).value;
}

MupSeriesReport mup_series_check(int c, int n_max, const MupOptions& options) {
  if (c < 1) throw std::invalid_argument("mup_series_check requires c >= 1");
  MupSeriesReport report;
  report.c = c;
  report.nu = smallest_nondivisor(c);
  report.n_max = n_max;

  std::map<int, int> value_at;
  for (int n = c + 1; n <= n_max; ++n) {
    MupSeriesRow row;
    row.n = n;
    try {
      row.result = mup(n, c, options);
    } catch (const BudgetExceeded&) {
      report.rows.push_back(row);
      continue;
    }
    const PartitionPair& w = row.result->witness;
    std::vector<int> parts = w.parts_a;
    parts.insert(parts.end(), w.parts_b.begin(), w.parts_b.end());
    for (int d = 1; d <= c; ++d) {
      if (c % d != 0) continue;
      if (std::count(parts.begin(), parts.end(), d) > c / d) row.divisor_property = false;
    }
    report.divisor_property_holds = report.divisor_property_holds && row.divisor_property;
    row.nu_fraction = static_cast<double>(std::count(parts.begin(), parts.end(), report.nu)) /
                      static_cast<double>(parts.size());
    row.delta_vs_formula = row.result->value - n / report.nu;
    value_at[n] = row.result->value;
    report.rows.push_back(row);
  }

  for (const auto& [n, value] : value_at) {
    auto ahead = value_at.find(n + report.nu);
    if (ahead == value_at.end()) continue;
    if (ahead->second - value != 1) report.last_step_failure = n;
  }
  for (const auto& [n, value] : value_at) {
    if (!value_at.contains(n + report.nu)) continue;
    if (!report.last_step_failure || n > *report.last_step_failure) ++report.steps_after_prefix;
  }
  return report;
}

std::string to_csv(const MupSeriesReport& report) {
  std::ostringstream out;
  out << "n,c,mup,witness,delta_vs_formula\n";
  for (const MupSeriesRow& row : report.rows) {
    out << row.n << ',' << report.c << ',';
    if (row.result) {
      out << row.result->value << ',' << witness_text(row.result->witness) << ','
          << *row.delta_vs_formula;
    } else {
      out << "unsolved,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const MupSeriesReport& report) {
  nlohmann::ordered_json doc;
  doc["c"] = report.c;
  doc["nu"] = report.nu;
  doc["n_max"] = report.n_max;
  doc["divisor_property_holds"] = report.divisor_property_holds;
  doc["last_step_failure"] = report.last_step_failure
                                 ? nlohmann::ordered_json(*report.last_step_failure)
                                 : nullptr;
  doc["steps_after_prefix"] = report.steps_after_prefix;
  auto rows = nlohmann::ordered_json::array();
  for (const MupSeriesRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["c"] = report.c;
    if (row.result) {
      r["mup"] = row.result->value;
      r["witness"] = witness_text(row.result->witness);
      r["delta_vs_formula"] = *row.delta_vs_formula;
      r["divisor_property"] = row.divisor_property;
      r["nu_fraction"] = row.nu_fraction;
    } else {
      r["mup"] = "unsolved";
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

}  // namespace exa
