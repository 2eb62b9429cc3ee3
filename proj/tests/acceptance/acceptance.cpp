// Runs every verify suite, prints its table, then one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "exa/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "single K_r copy equality and klikk constructions", {"klikk"}},
      {2, "k-triangle construction and oracle lower bound", {"triangle"}},
      {3, "perfect matching, Hamilton cycle, Turan and non-bipartite classics", {"classics"}},
      {4, "sandwich inequalities, zeta and star bounds", {"sandwich", "zeta"}},
      {5, "unique bipartite partitions and mup series", {"kab", "mup-series"}},
      {6, "search game values, chain and NO-first adversary", {"games"}},
      {7, "extremal questioner strategy", {"questioner"}},
  };
  return list;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::map<std::string, std::string> serial_json;
  std::map<std::string, bool> suite_ok;

  for (const std::string& name : exa::verify_suites()) {
    const auto start = Clock::now();
    exa::VerifyReport r;
    try {
      r = exa::run_suite(name);
    } catch (const std::exception& e) {
      std::cout << "suite " << name << ": error: " << e.what() << '\n';
      suite_ok[name] = false;
      continue;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << exa::to_text(r);
    std::printf("suite %s took %.1f s\n\n", name.c_str(), secs);
    std::cout.flush();
    suite_ok[name] = r.passed && r.complete;
    serial_json[name] = exa::to_json(r);
  }

  bool all = true;
  std::vector<std::string> lines;
  char buf[256];
  for (const Criterion& c : criteria()) {
    bool ok = true;
    for (const std::string& s : c.suites) ok = ok && suite_ok[s];
    all = all && ok;
    std::snprintf(buf, sizeof buf, "criterion %d %s: %s", c.id, ok ? "PASS" : "FAIL",
                  c.title.c_str());
    lines.push_back(buf);
  }

  // Criterion 8: a second run at jobs=1 and a run at jobs=8 must both
  // reproduce the first run byte for byte.
  bool same = true;
  for (const std::string& name : exa::verify_suites()) {
    const auto first = serial_json.find(name);
    if (first == serial_json.end()) {
      same = false;
      continue;
    }
    for (int jobs : {1, 8}) {
      exa::VerifyOptions opts;
      opts.jobs = jobs;
      const std::string again = exa::to_json(exa::run_suite(name, opts));
      if (again != first->second) {
        std::cout << "suite " << name << " differs at jobs=" << jobs << '\n';
        same = false;
      }
    }
  }
  all = all && same;
  lines.push_back(std::string("criterion 8 ") + (same ? "PASS" : "FAIL") +
                  ": byte-identical JSON across runs and jobs 1 vs 8");

  for (const std::string& l : lines) std::cout << l << '\n';
  return all ? 0 : 1;
}
