#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exa {

// Two multisets of positive integers meant to sum to A and B. Parts are kept
// in non-increasing order by the functions that produce them.
struct PartitionPair {
  std::vector<int> parts_a;
  std::vector<int> parts_b;

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least v >= 2 that does not divide c.
int smallest_nondivisor(int c);

// True iff the a+b indexed parts admit exactly one split into sides summing
// to (A, B); when A == B a split and its mirror are the same. Pairs sharing a
// value between sides are never unique. Throws std::invalid_argument when the
// sums are wrong or a part is not positive.
bool is_unique_partition(int a, int b, const PartitionPair& pp);

struct MupResult {
  int value = 0;
  PartitionPair witness;
};

struct MupOptions {
  // Candidate partition pairs examined before giving up.
  std::uint64_t max_candidates = 200'000'000;
};

// Largest a+b over unique partitions of (A, B), with the lexicographically
// smallest (parts_a, parts_b) attaining it. mup(1,1) = 2 by convention.
// Requires A+B <= 60; throws BudgetExceeded when the candidate budget runs out.
MupResult mup(int a, int b, const MupOptions& options = {});

// C(A+B, 2) - A - B + mup(A, B).
long exa1_kab(int a, int b, const MupOptions& options = {});

struct MupSeriesRow {
  int n = 0;
  std::optional<MupResult> result;  // absent when unsolved within budget
  // Delta against n / nu, rounded down.
  std::optional<int> delta_vs_formula;
  // Whether every divisor d of c occurs at most c/d times in the witness.
  bool divisor_property = true;
  // Witness parts equal to nu, over all witness parts.
  double nu_fraction = 0;
};

struct MupSeriesReport {
  int c = 0;
  int nu = 0;
  int n_max = 0;
  std::vector<MupSeriesRow> rows;  // n = c+1 .. n_max
  bool divisor_property_holds = true;
  // Largest n with mup(n+nu, c) - mup(n, c) != 1 among observed pairs; absent
  // when every observed difference is 1.
  std::optional<int> last_step_failure;
  // Number of observed n above the failure prefix where the step equals 1.
  int steps_after_prefix = 0;
};

MupSeriesReport mup_series_check(int c, int n_max, const MupOptions& options = {});

std::string to_csv(const MupSeriesReport& report);
std::string to_json(const MupSeriesReport& report);

}  // namespace exa
