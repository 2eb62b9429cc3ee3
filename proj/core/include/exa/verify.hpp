#pragma once

#include <string>
#include <vector>

namespace exa {

// One checked statement: computed relates to expected by relation
// ("=", "<=", ">=", "report"). Report rows never fail a suite.
struct VerifyRow {
  std::string check;
  std::string relation;
  std::string expected;
  std::string computed;
  bool ok = true;
  bool report_only = false;
};

struct VerifyOptions {
  int jobs = 1;
  // Largest order the suite searches exhaustively; 0 keeps the suite default.
  int n_max = 0;
  double budget_seconds = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyRow> rows;
  bool passed = true;
  // False when a search ran out of budget.
  bool complete = true;
};

// klikk, triangle, classics, sandwich, zeta, kab, mup-series, games,
// questioner.
const std::vector<std::string>& verify_suites();

// Throws std::invalid_argument for unknown suite names.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options = {});

// Independent of jobs and timing.
std::string to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace exa
