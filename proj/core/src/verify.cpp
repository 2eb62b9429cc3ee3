#include "exa/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "exa/constructions.hpp"
#include "exa/family.hpp"
#include "exa/game.hpp"
#include "exa/graph6.hpp"
#include "exa/oracle.hpp"
#include "exa/partitions.hpp"

namespace exa {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

long turan_edges(int n, int r) {
  const std::vector<int> parts = balanced_parts(n, r);
  return complete_multipartite(parts).edge_count();
}

std::string text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& options) : options_(options) {
    report_.suite = std::move(name);
  }

  int n_max(int fallback) const { return options_.n_max > 0 ? options_.n_max : fallback; }

  OracleOptions oracle() const {
    OracleOptions o;
    o.jobs = options_.jobs;
    o.budget_seconds = options_.budget_seconds;
    return o;
  }

  SolverOptions solver() const {
    SolverOptions o;
    o.jobs = options_.jobs;
    return o;
  }

  // Oracle value, marking the report incomplete when the search gave up.
  std::optional<int> value(const OracleResult& r) {
    if (!r.complete) report_.complete = false;
    return r.complete ? r.value : std::nullopt;
  }

  std::optional<int> value(const GameValue& g) {
    if (!g.complete) report_.complete = false;
    return g.value;
  }

  void add(std::string check, std::string relation, std::string expected, std::string computed,
           bool ok, bool report_only = false) {
    VerifyRow row{std::move(check), std::move(relation), std::move(expected),
                  std::move(computed), ok, report_only};
    if (!report_only && !ok) report_.passed = false;
    report_.rows.push_back(std::move(row));
  }

  void eq(std::string check, long expected, std::optional<long> computed) {
    add(std::move(check), "=", std::to_string(expected),
        computed ? std::to_string(*computed) : "none", computed && *computed == expected);
  }

  void eq_text(std::string check, const std::string& expected, const std::string& computed) {
    add(std::move(check), "=", expected, computed, expected == computed);
  }

  // computed <= bound
  void at_most(std::string check, long bound, std::optional<long> computed) {
    add(std::move(check), "<=", std::to_string(bound),
        computed ? std::to_string(*computed) : "none", computed && *computed <= bound);
  }

  // computed >= bound
  void at_least(std::string check, long bound, std::optional<long> computed) {
    add(std::move(check), ">=", std::to_string(bound),
        computed ? std::to_string(*computed) : "none", computed && *computed >= bound);
  }

  void report(std::string check, std::string expected, std::string computed) {
    const bool same = expected == computed;
    add(std::move(check), "report", std::move(expected), std::move(computed), same, true);
  }

  VerifyReport finish() {
    if (!report_.complete) report_.passed = false;
    return std::move(report_);
  }

 private:
  VerifyOptions options_;
  VerifyReport report_;
};

std::string label(const char* what, int n, int r) {
  return std::string(what) + "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
}

std::string nk(const std::string& what, int n, int k) {
  return what + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
}

VerifyReport klikk_suite(const VerifyOptions& options) {
  Suite s("klikk", options);
  const int top = s.n_max(7);
  for (int r : {3, 4}) {
    const GraphFamily clique = family_from_spec("clique:" + std::to_string(r), r);
    const int last = r == 3 ? top : std::min(top, 6);
    for (int n = r; n <= last; ++n) {
      const auto exa = s.value(exa_oracle(n, 1, clique, s.oracle()));
      const auto ex_rest = n - r >= 1 ? s.value(ex_oracle(n - r, clique, s.oracle()))
                                      : std::optional<int>(0);
      if (!ex_rest) {
        s.eq(label("exa_1 K_r", n, r), 0, std::nullopt);
        continue;
      }
      const long formula = binom2(r) + static_cast<long>(r - 2) * (n - r) + *ex_rest;
      s.eq(label("exa_1 K_r", n, r), formula, exa);
      if (r == 3) s.eq(label("klikk edges vs oracle", n, r), build_klikk(n, r).actual_edges, exa);
    }
  }
  for (int r = 3; r <= 5; ++r)
    for (int n = r; n <= 12; ++n) {
      const ConstructionReport c = build_klikk(n, r);
      s.add(label("build_klikk", n, r), "=",
            std::to_string(c.expected_edges) + " edges, 1 copy",
            std::to_string(c.actual_edges) + " edges, " + std::to_string(c.actual_copies) +
                " copy",
            c.ok);
    }
  return s.finish();
}

VerifyReport triangle_suite(const VerifyOptions& options) {
  Suite s("triangle", options);
  const int top = s.n_max(7);
  const GraphFamily triangle = family_from_spec("clique:3", 3);
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; k <= 4; ++k) {
      if (n - 1 - (n - 1) / 2 < k) continue;
      const ConstructionReport c = build_triangle_k(n, k);
      s.add(nk("build_triangle_k", n, k), "=",
            std::to_string(c.expected_edges) + " edges, " + std::to_string(k) + " triangles",
            std::to_string(c.actual_edges) + " edges, " + std::to_string(c.actual_copies) +
                " triangles",
            c.ok);
    }
  for (int n = 3; n <= top; ++n)
    for (int k = 1; k <= 3; ++k) {
      if (n - 1 - (n - 1) / 2 < k) continue;
      const long formula = static_cast<long>(n - 1) * (n - 1) / 4 + k + 1;
      const auto exa = s.value(exa_oracle(n, static_cast<Count>(k), triangle, s.oracle()));
      s.at_least(nk("exa_k K_3 lower bound", n, k), formula, exa);
      s.report(nk("exa_k K_3 equality", n, k), std::to_string(formula), text(exa));
    }
  return s.finish();
}

VerifyReport classics_suite(const VerifyOptions& options) {
  Suite s("classics", options);
  const int top = s.n_max(8);
  for (int n : {4, 6}) {
    if (n > top) continue;
    s.eq("exa_1 perfect matching n=" + std::to_string(n), n * n / 4,
         s.value(exa_oracle(n, 1, family_from_spec("perfmatching", n), s.oracle())));
    s.eq("exa_1 Hamilton cycle n=" + std::to_string(n), n * n / 4 + 1,
         s.value(exa_oracle(n, 1, family_from_spec("hamcycle", n), s.oracle())));
  }
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= top; ++n)
      s.eq("ex K_{r+1} " + label("", n, r), turan_edges(n, r),
           s.value(ex_oracle(n, family_from_spec("clique:" + std::to_string(r + 1), n),
                             s.oracle())));
  for (int n = 5; n <= top; ++n) {
    const GraphPredicate triangle_free_nonbipartite = [](const Graph& g) {
      for (const Edge& e : g.edges())
        if (g.neighbors(e.u) & g.neighbors(e.v)) return false;
      return !is_bipartite(g);
    };
    s.eq("triangle-free non-bipartite n=" + std::to_string(n), (n - 1) * (n - 1) / 4 + 1,
         s.value(max_edges_with(n, triangle_free_nonbipartite, s.oracle())));
  }
  return s.finish();
}

VerifyReport sandwich_suite(const VerifyOptions& options) {
  Suite s("sandwich", options);
  const int top = s.n_max(7);

  // Connected families: (n - 2kv) ex <= n exa_k and exa_k <= ex + k.
  for (const char* spec : {"clique:3", "cycle:4", "cycle:5"}) {
    for (int n = 5; n <= top; ++n) {
      const GraphFamily fam = family_from_spec(spec, n);
      const int v = fam.min_order();
      const auto ex = s.value(ex_oracle(n, fam, s.oracle()));
      for (int k = 1; k <= 3; ++k) {
        const std::string name = std::string(spec) + " " + nk("", n, k);
        const auto exa = s.value(exa_oracle(n, static_cast<Count>(k), fam, s.oracle()));
        if (!ex) {
          s.eq("ex " + name, 0, std::nullopt);
          continue;
        }
        const long scaled = static_cast<long>(n - 2 * k * v) * *ex;
        if (exa) {
          s.at_least("lower n*exa_k vs (n-2kv)ex " + name, scaled,
                     static_cast<long>(n) * *exa);
          s.at_most("upper exa_k vs ex+k " + name, *ex + k, exa);
        } else {
          // No graph with exactly k copies: only a vacuous lower bound is consistent.
          s.add("lower (none) " + name, "<=", "0", std::to_string(scaled), scaled <= 0);
        }
      }
    }
  }

  // Disconnected 2K_2, where ex of its components is ex(n, K_2) = 0.
  for (int n = 4; n <= top; ++n) {
    const GraphFamily two_k2 = family_from_spec("matching:4", n);
    const auto ex_k2 = s.value(ex_oracle(n, family_from_spec("clique:2", n), s.oracle()));
    for (int k = 1; k <= 3; ++k) {
      const auto exa = s.value(exa_oracle(n, static_cast<Count>(k), two_k2, s.oracle()));
      if (k == 1) s.eq("exa_1 2K_2 n=" + std::to_string(n), 4, exa);
      if (!exa || !ex_k2) continue;
      s.at_least("lower 2K_2 " + nk("", n, k),
                 static_cast<long>(n - 2 * k * 4) * *ex_k2, static_cast<long>(n) * *exa);
    }
  }

  // exa_1(n,F) <= C(v,2) + zeta(F)(n-v) + ex(n-v,F).
  for (const char* spec : {"clique:3", "clique:4", "cycle:4"}) {
    const GraphFamily probe = family_from_spec(spec, 4);
    const Graph f = probe.patterns()[0].graph();
    const int v = f.order();
    const int z = zeta(f).value;
    for (int n = v; n <= top; ++n) {
      const GraphFamily fam = family_from_spec(spec, n);
      const auto exa = s.value(exa_oracle(n, 1, fam, s.oracle()));
      const auto ex_rest =
          n - v >= 1 ? s.value(ex_oracle(n - v, fam, s.oracle())) : std::optional<int>(0);
      if (!ex_rest) continue;
      s.at_most(std::string("zeta bound ") + spec + " n=" + std::to_string(n),
                binom2(v) + static_cast<long>(z) * (n - v) + *ex_rest, exa);
    }
  }

  // Stars with three leaves.
  const int r = 3;
  for (int n : {5, 6}) {
    if (n > top) continue;
    const GraphFamily star = family_from_spec("star:3", n);
    const auto ex = s.value(ex_oracle(n, star, s.oracle()));
    s.eq("ex S_3 n=" + std::to_string(n), n * (r - 1) / 2, ex);
    for (int k : {2, 4}) {
      const auto exa = s.value(exa_oracle(n, static_cast<Count>(k), star, s.oracle()));
      if (!ex) continue;
      s.at_least("star lower " + nk("", n, k), *ex + k / 2 - 1, exa);
      if (n * (r - 1) % 2 == 0 && k % 2 == 0)
        s.eq("star exact " + nk("", n, k), n * (r - 1) / 2 + k / 2, exa);
    }
  }
  return s.finish();
}

VerifyReport zeta_suite(const VerifyOptions& options) {
  Suite s("zeta", options);
  for (int r = 3; r <= 5; ++r)
    s.eq("zeta K_" + std::to_string(r), r - 2, zeta(complete_graph(r)).value);
  s.eq("zeta P_3", 0, zeta(path_graph(3)).value);
  s.report("zeta C_4", "", std::to_string(zeta(cycle_graph(4)).value));
  const int top = std::min(s.n_max(5), 6);
  for (const Graph& f : all_patterns(top)) {
    const int z = zeta(f).value;
    s.at_least("zeta >= min degree - 1 for " + encode_graph6(f), f.min_degree() - 1, z);
  }
  return s.finish();
}

std::string parts_text(const PartitionPair& pp) {
  auto join = [](const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out;
  };
  return join(pp.parts_a) + "/" + join(pp.parts_b);
}

VerifyReport kab_suite(const VerifyOptions& options) {
  Suite s("kab", options);
  struct Example {
    int a, b;
    PartitionPair pp;
    bool unique;
  };
  const std::vector<Example> examples = {
      {6, 53, {{3, 3}, {13, 13, 13, 13, 1}}, true},
      {6, 53, {{3, 3}, {50, 3}}, false},
      {6, 6, {{3, 3}, {2, 2, 2}}, true},
      {6, 6, {{3, 3}, {3, 3}}, false},
  };
  for (const Example& e : examples) {
    const bool got = is_unique_partition(e.a, e.b, e.pp);
    s.eq_text("unique " + std::to_string(e.a) + "," + std::to_string(e.b) + " " +
                  parts_text(e.pp),
              e.unique ? "true" : "false", got ? "true" : "false");
  }
  s.eq("mup(1,1)", 2, mup(1, 1).value);
  for (int a = 2; a <= 10; ++a)
    for (int b = a; b <= 10; ++b) {
      const MupResult m = mup(a, b);
      const std::string name = "mup(" + std::to_string(a) + "," + std::to_string(b) + ")";
      s.add(name + " range", "in", "[" + std::to_string(a + 1) + "," + std::to_string(a + b) + "]",
            std::to_string(m.value), a + 1 <= m.value && m.value <= a + b);
      s.eq(name + " symmetric", m.value, mup(b, a).value);
    }
  const int top = s.n_max(7);
  for (int a = 1; a <= top; ++a)
    for (int b = a; a + b <= top; ++b) {
      const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      const int n = a + b;
      const auto oracle = s.value(exa_oracle(
          n, 1, family_from_spec("bipartite:" + std::to_string(a) + "," + std::to_string(b), n),
          s.oracle()));
      const long formula = exa1_kab(a, b);
      s.eq("exa1_kab vs oracle " + name, formula, oracle);
      if (a == 1 && b == 1) continue;
      const ConstructionReport c = build_unique_kab(a, b, mup(a, b).witness);
      s.add("build_unique_kab " + name, "=",
            std::to_string(formula) + " edges, 1 copy",
            std::to_string(c.actual_edges) + " edges, " + std::to_string(c.actual_copies) +
                " copy",
            c.ok && c.actual_edges == formula);
    }
  return s.finish();
}

VerifyReport mup_series_suite(const VerifyOptions& options) {
  Suite s("mup-series", options);
  const int top = s.n_max(40);
  for (int c = 1; c <= 4; ++c) {
    const MupSeriesReport r = mup_series_check(c, top);
    const std::string tag = "c=" + std::to_string(c);
    const bool solved = std::all_of(r.rows.begin(), r.rows.end(),
                                    [](const MupSeriesRow& row) { return row.result.has_value(); });
    s.add("all rows solved " + tag, "=", "true", solved ? "true" : "false", solved);
    s.add("divisor property " + tag, "=", "true", r.divisor_property_holds ? "true" : "false",
          r.divisor_property_holds);
    s.at_least("unit steps above prefix " + tag, 1, r.steps_after_prefix);
    s.report("prefix " + tag, "",
             r.last_step_failure ? std::to_string(*r.last_step_failure) : "none");
    for (const MupSeriesRow& row : r.rows) {
      if (!row.result) continue;
      std::ostringstream frac;
      frac.precision(3);
      frac << std::fixed << row.nu_fraction;
      s.report("mup(" + std::to_string(row.n) + "," + std::to_string(c) + ") witness", "",
               std::to_string(row.result->value) + " " + parts_text(row.result->witness) +
                   " delta=" + std::to_string(*row.delta_vs_formula) + " nu_fraction=" +
                   frac.str());
    }
  }
  return s.finish();
}

struct GameCase {
  int n;
  std::string spec;
  std::optional<int> l, x, x_prime, exa1_prime;
};

VerifyReport games_suite(const VerifyOptions& options) {
  Suite s("games", options);
  const std::vector<GameCase> cases = {
      {4, "star", 2, 2, 5},
      {5, "star", 3, 2, std::nullopt},
      {4, "trees", 5, 3, std::nullopt},
      {5, "trees", 9, 6, std::nullopt},
      {4, "kminus", 5, 1, std::nullopt},
      {4, "clique:3", std::nullopt, std::nullopt, std::nullopt},
      {5, "clique:3", std::nullopt, std::nullopt, std::nullopt},
      {4, "perfmatching", std::nullopt, std::nullopt, std::nullopt},
      {4, "trees+clique:3", std::nullopt, std::nullopt, 6, 0},
      {5, "trees+clique:4", std::nullopt, 6, 10, 0},
  };
  for (const GameCase& gc : cases) {
    const GraphFamily fam = family_from_spec(gc.spec, gc.n);
    const std::string tag = gc.spec + " n=" + std::to_string(gc.n);
    const auto game = std::make_shared<const Game>(gc.n, fam);
    const long pairs = pair_count(gc.n);

    const auto l = s.value(solve_game(*game, GameCost::kQueries, s.solver()));
    const auto x = s.value(solve_game(*game, GameCost::kNoAnswers, s.solver()));
    const auto xp = s.value(solve_game(*game, GameCost::kProof, s.solver()));
    const auto exa1 = s.value(exa_oracle(gc.n, 1, fam, s.oracle()));
    const auto exa1p = s.value(exa_prime_oracle(gc.n, fam, s.oracle()));
    if (gc.l) s.eq("L " + tag, *gc.l, l);
    if (gc.x) s.eq("x " + tag, *gc.x, x);
    if (gc.x_prime) s.eq("x' " + tag, *gc.x_prime, xp);
    if (gc.exa1_prime) s.eq("exa'_1 " + tag, *gc.exa1_prime, exa1p);
    if (!l || !x || !xp || !exa1 || !exa1p) continue;

    if (gc.spec == "clique:3") s.eq("L = C(n,2) - exa_1 " + tag, pairs - *exa1, l);
    s.at_least("x >= C(n,2) - exa_1 " + tag, pairs - *exa1, x);
    s.at_least("L >= x " + tag, *x, l);
    s.at_least("x' >= L " + tag, *l, xp);
    s.at_least("x' >= C(n,2) - exa'_1 " + tag, pairs - *exa1p, xp);
    if (fam.uniform_edge_count())
      s.eq("x + e = x' " + tag, *x + fam.min_edge_count(), xp);
    s.report("x - (C(n,2) - exa_1) " + tag, "0", std::to_string(*x - (pairs - *exa1)));

    s.at_least("NO-first forces NO answers " + tag, pairs - *exa1, no_first_min_no_answers(*game));
    auto solver = std::make_shared<GameSolver>(game, GameCost::kQueries, s.solver());
    const Transcript t = simulate(*game, solver_questioner(solver), no_first_adversary(game));
    s.at_least("NO answers vs optimal questioner " + tag, pairs - *exa1, t.no_answers);
    s.at_most("queries vs optimal questioner " + tag, *l, t.total_queries);
  }
  return s.finish();
}

VerifyReport questioner_suite(const VerifyOptions& options) {
  Suite s("questioner", options);
  const GraphFamily triangle = family_from_spec("clique:3", 3);
  for (int n = 4; n <= 6; ++n) {
    const auto game = std::make_shared<const Game>(n, family_from_spec("clique:3", n));
    const Graph extremal = build_klikk(n, 3).graph;
    const Questioner q = questioner_extremal_strategy(game, complete_graph(3), extremal);
    const long pairs = pair_count(n);
    const long expected = pairs - extremal.edge_count();
    const std::string tag = " n=" + std::to_string(n);

    const Transcript t = simulate(*game, q, no_first_adversary(game));
    if (n == 5) {
      s.eq("extremal strategy queries vs NO-first" + tag, expected, t.total_queries);
      s.eq("extremal strategy NO answers vs NO-first" + tag, expected, t.no_answers);
    } else {
      s.report("extremal strategy queries vs NO-first" + tag, std::to_string(expected),
               std::to_string(t.total_queries));
    }

    bool first = true;
    const Adversary yes_once = [&](const GameState& st, Edge e) {
      if (first) {
        first = false;
        if (!game->consistent(st.after(game->index_of(e), true)).empty()) return true;
      }
      return adversary_no_first(*game, st, e);
    };
    s.at_most("extremal strategy vs YES on first query" + tag, pairs,
              simulate(*game, q, yes_once).total_queries);

    const WorstCase w = worst_case_against_all(*game, q);
    s.at_most("extremal strategy worst case" + tag, pairs, w.queries);
    s.report("extremal strategy overhead over C(n,2) - exa_1" + tag, "",
             std::to_string(w.queries - expected));
  }

  for (int n : {4, 5}) {
    const auto game = std::make_shared<const Game>(n, family_from_spec("star", n));
    const Transcript t =
        simulate(*game, matching_first_star_questioner(game), no_first_adversary(game));
    s.eq("matching-first NO answers star n=" + std::to_string(n), n / 2, t.no_answers);
  }
  {
    const auto game = std::make_shared<const Game>(4, family_from_spec("clique:3", 4));
    auto solver = std::make_shared<GameSolver>(game, GameCost::kQueries);
    const Transcript t = simulate(*game, solver_questioner(solver), no_first_adversary(game));
    const long pairs = pair_count(4);
    s.eq("optimal questioner queries clique:3 n=4",
         pairs - *exa_oracle(4, 1, triangle, s.oracle()).value, t.total_queries);
  }
  return s.finish();
}

using SuiteFn = VerifyReport (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"klikk", klikk_suite},           {"triangle", triangle_suite},
      {"classics", classics_suite},     {"sandwich", sandwich_suite},
      {"zeta", zeta_suite},             {"kab", kab_suite},
      {"mup-series", mup_series_suite}, {"games", games_suite},
      {"questioner", questioner_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"klikk", "triangle",   "classics",
                                                 "sandwich", "zeta",   "kab",
                                                 "mup-series", "games", "questioner"};
  return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(options);
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["passed"] = report.passed;
  doc["complete"] = report.complete;
  auto rows = nlohmann::ordered_json::array();
  for (const VerifyRow& r : report.rows)
    rows.push_back({{"check", r.check},
                    {"relation", r.relation},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"ok", r.ok},
                    {"report_only", r.report_only}});
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string to_text(const VerifyReport& report) {
  std::size_t width = 5;
  for (const VerifyRow& r : report.rows) width = std::max(width, r.check.size());
  std::ostringstream out;
  for (const VerifyRow& r : report.rows) {
    const char* status = r.report_only ? "info" : (r.ok ? "ok" : "FAIL");
    out << r.check << std::string(width - r.check.size() + 2, ' ') << r.relation << "  expected "
        << (r.expected.empty() ? "-" : r.expected) << "  computed " << r.computed << "  "
        << status << '\n';
  }
  out << "suite " << report.suite << ": " << (report.passed ? "passed" : "FAILED")
      << (report.complete ? "" : " (incomplete)") << '\n';
  return out.str();
}

}  // namespace exa
