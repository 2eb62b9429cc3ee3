#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "exa/constructions.hpp"
#include "exa/count.hpp"
#include "exa/family.hpp"
#include "exa/game.hpp"
#include "exa/graph6.hpp"
#include "exa/oracle.hpp"
#include "exa/partitions.hpp"
#include "exa/verify.hpp"

namespace exa::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  int jobs = 1;
  double budget = 0;
  std::uint64_t seed = 1;
};

Graph read_graph(const std::string& arg) {
  if (arg.empty()) throw UsageError("empty graph argument");
  if (arg[0] != '@') return decode_graph6(arg);
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot open " + arg.substr(1));
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return decode_graph6(line);
  throw UsageError(arg.substr(1) + " holds no graph");
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

// "3,3/13,13,13,13,1"
PartitionPair parse_parts(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("parts must look like 3,3/13,13,13,13,1");
  return {parse_ints(text.substr(0, slash)), parse_ints(text.substr(slash + 1))};
}

std::string parts_text(const PartitionPair& pp) {
  auto join = [](const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out;
  };
  return join(pp.parts_a) + "/" + join(pp.parts_b);
}

OracleOptions oracle_options(const Common& c, bool allow_large) {
  OracleOptions o;
  o.jobs = c.jobs;
  o.budget_seconds = c.budget;
  o.allow_large = allow_large;
  return o;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string host;
  std::string pattern;
  std::string family;
  int random_order = 0;
  double density = 0.5;
};

int cmd_count(const CountArgs& a, const Common& c, std::ostream& out) {
  Graph host;
  if (a.random_order > 0) {
    if (!a.host.empty()) throw UsageError("--host and --random are exclusive");
    if (a.random_order > kMaxVertices) throw UsageError("--random exceeds 32 vertices");
    std::mt19937_64 rng(c.seed);
    std::bernoulli_distribution coin(a.density);
    host = Graph(a.random_order);
    for (int v = 1; v < a.random_order; ++v)
      for (int u = 0; u < v; ++u)
        if (coin(rng)) host.add_edge(u, v);
  } else {
    if (a.host.empty()) throw UsageError("count needs --host or --random");
    host = read_graph(a.host);
  }
  if (a.pattern.empty() == a.family.empty())
    throw UsageError("count needs exactly one of --pattern and --family");
  const GraphFamily fam = a.family.empty()
                              ? GraphFamily(a.pattern, {read_graph(a.pattern)})
                              : family_from_spec(a.family, host.order());
  const Count copies = count_family(host, fam);
  if (c.json) {
    Json doc;
    doc["host_graph6"] = encode_graph6(host);
    doc["family"] = fam.name();
    doc["copies"] = copies;
    out << doc.dump() << '\n';
  } else {
    out << copies << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string kind;
  int n = 0;
  std::string family;
  std::uint64_t k = 1;
  std::string set;
  std::string graph;
  bool allow_large = false;
};

int cmd_oracle(const OracleArgs& a, const Common& c, std::ostream& out) {
  if (a.kind == "zeta") {
    if (a.graph.empty()) throw UsageError("oracle zeta needs --graph");
    const ZetaResult z = zeta(read_graph(a.graph));
    if (c.json) {
      Json doc;
      doc["value"] = z.value;
      doc["witness_graph6"] = encode_graph6(z.witness);
      out << doc.dump() << '\n';
    } else {
      out << z.value << ' ' << encode_graph6(z.witness) << '\n';
    }
    return kOk;
  }
  if (a.n < 0) throw UsageError("oracle needs --n");
  if (a.family.empty()) throw UsageError("oracle needs --family");
  const GraphFamily fam = family_from_spec(a.family, std::max(a.n, 1));
  const OracleOptions opts = oracle_options(c, a.allow_large);
  OracleResult r;
  if (a.kind == "ex") {
    r = ex_oracle(a.n, fam, opts);
  } else if (a.kind == "exa") {
    r = exa_oracle(a.n, a.k, fam, opts);
  } else if (a.kind == "exa-set") {
    if (a.set.empty()) throw UsageError("oracle exa-set needs --set");
    std::vector<Count> allowed;
    for (int v : parse_ints(a.set)) {
      if (v < 0) throw UsageError("--set counts must be non-negative");
      allowed.push_back(static_cast<Count>(v));
    }
    r = exa_set_oracle(a.n, allowed, fam, opts);
  } else if (a.kind == "exa-prime") {
    r = exa_prime_oracle(a.n, fam, opts);
  } else {
    throw UsageError("unknown oracle '" + a.kind + "'");
  }
  if (c.json) {
    out << to_json(r) << '\n';
  } else {
    out << (r.value ? std::to_string(*r.value) : "none");
    if (r.witness) out << ' ' << encode_graph6(*r.witness);
    if (!r.complete) out << " (incomplete)";
    out << '\n';
  }
  return r.complete ? kOk : kUnsolved;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int n = 0, r = 0, k = 0, a = 0, b = 0;
  std::string parts;
};

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out) {
  ConstructionReport report;
  if (a.kind == "klikk") {
    report = build_klikk(a.n, a.r);
  } else if (a.kind == "triangle") {
    report = build_triangle_k(a.n, a.k);
  } else if (a.kind == "kab") {
    const PartitionPair pp = a.parts.empty() ? mup(a.a, a.b).witness : parse_parts(a.parts);
    report = build_unique_kab(a.a, a.b, pp);
  } else if (a.kind == "star") {
    report = build_star_k(a.n, a.r, a.k);
  } else {
    throw UsageError("unknown construction '" + a.kind + "'");
  }
  if (c.json) {
    out << to_json(report) << '\n';
  } else {
    out << encode_graph6(report.graph) << '\n'
        << report.name << ": edges " << report.actual_edges << " (expected "
        << report.expected_edges << "), copies " << report.actual_copies << " (expected "
        << report.expected_copies << ")" << (report.ok ? "" : " MISMATCH") << '\n';
  }
  return report.ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct MupArgs {
  int a = 0, b = 0;
  std::string check;
  bool series = false;
  int c = 0;
  int n_max = 40;
  bool csv = false;
};

int cmd_mup(const MupArgs& m, const Common& c, std::ostream& out) {
  if (m.series) {
    if (m.c < 1) throw UsageError("mup --series needs --c");
    const MupSeriesReport r = mup_series_check(m.c, m.n_max);
    if (c.json)
      out << to_json(r) << '\n';
    else
      out << to_csv(r);
    bool solved = true;
    for (const MupSeriesRow& row : r.rows) solved = solved && row.result.has_value();
    return solved ? kOk : kUnsolved;
  }
  if (m.a < 1 || m.b < 1) throw UsageError("mup needs --a and --b");
  if (!m.check.empty()) {
    const PartitionPair pp = parse_parts(m.check);
    const bool unique = is_unique_partition(m.a, m.b, pp);
    if (c.json) {
      Json doc;
      doc["a"] = m.a;
      doc["b"] = m.b;
      doc["parts"] = parts_text(pp);
      doc["unique"] = unique;
      out << doc.dump() << '\n';
    } else {
      out << "unique=" << (unique ? "true" : "false") << '\n';
    }
    return kOk;
  }
  const MupResult r = mup(m.a, m.b);
  if (c.json) {
    Json doc;
    doc["a"] = m.a;
    doc["b"] = m.b;
    doc["mup"] = r.value;
    doc["witness"] = parts_text(r.witness);
    doc["exa1_kab"] = exa1_kab(m.a, m.b);
    out << doc.dump() << '\n';
  } else {
    out << r.value << ' ' << parts_text(r.witness) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct GameArgs {
  std::string kind;
  int n = 0;
  std::string family;
  bool no_symmetry = false;
  std::uint64_t max_states = SolverOptions{}.max_states;
  int n_max = 5;
  int pattern_max = 4;
};

int cmd_game(const GameArgs& g, const Common& c, std::ostream& out) {
  SolverOptions opts;
  opts.jobs = c.jobs;
  opts.symmetry = !g.no_symmetry;
  opts.max_states = g.max_states;
  opts.budget_seconds = c.budget;

  if (g.kind == "sweep") {
    const std::vector<SweepRow> rows = sweep_games(g.n_max, g.pattern_max, opts);
    if (c.json) {
      Json doc = Json::array();
      for (const SweepRow& r : rows)
        doc.push_back({{"pattern_graph6", r.pattern_graph6},
                       {"n", r.n},
                       {"exa1", r.exa1},
                       {"exa1_prime", r.exa1_prime},
                       {"x", r.x},
                       {"L", r.L},
                       {"x_prime", r.x_prime},
                       {"gap_x", r.gap_x},
                       {"gap_x_prime", r.gap_x_prime}});
      out << doc.dump() << '\n';
    } else {
      out << "pattern,n,exa1,exa1_prime,x,L,x_prime,gap_x,gap_x_prime\n";
      for (const SweepRow& r : rows)
        out << r.pattern_graph6 << ',' << r.n << ',' << r.exa1 << ',' << r.exa1_prime << ','
            << r.x << ',' << r.L << ',' << r.x_prime << ',' << r.gap_x << ','
            << r.gap_x_prime << '\n';
    }
    return kOk;
  }

  GameCost cost;
  if (g.kind == "L")
    cost = GameCost::kQueries;
  else if (g.kind == "x")
    cost = GameCost::kNoAnswers;
  else if (g.kind == "xprime")
    cost = GameCost::kProof;
  else
    throw UsageError("unknown game '" + g.kind + "'");
  if (g.n < 1) throw UsageError("game needs --n");
  if (g.family.empty()) throw UsageError("game needs --family");
  const GameValue v = solve_game(Game(g.n, family_from_spec(g.family, g.n)), cost, opts);
  if (c.json) {
    out << to_json(v) << '\n';
  } else {
    out << (v.value ? std::to_string(*v.value) : "unsolved");
    for (const Edge& e : v.first_moves) out << ' ' << to_string(e);
    out << '\n';
  }
  return v.complete ? kOk : kUnsolved;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int n_max = 0;
};

int cmd_verify(const VerifyArgs& v, const Common& c, std::ostream& out) {
  std::vector<std::string> names;
  if (v.suite == "all")
    names = verify_suites();
  else
    names = {v.suite};
  VerifyOptions opts;
  opts.jobs = c.jobs;
  opts.n_max = v.n_max;
  opts.budget_seconds = c.budget;

  bool passed = true;
  bool complete = true;
  Json docs = Json::array();
  for (const std::string& name : names) {
    const VerifyReport r = run_suite(name, opts);
    passed = passed && r.passed;
    complete = complete && r.complete;
    if (c.json)
      docs.push_back(Json::parse(to_json(r)));
    else
      out << to_text(r);
  }
  if (c.json) out << (names.size() == 1 ? docs[0].dump() : docs.dump()) << '\n';
  if (!complete) return kUnsolved;
  return passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, extremal numbers and query games for small graphs", "exa"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit one JSON document");
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget", common.budget, "Wall-clock budget in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", common.seed, "Seed for random inputs");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Copies of a pattern or family in a host graph");
  count->add_option("--host", count_args.host, "Host graph (graph6 or @file)");
  count->add_option("--pattern", count_args.pattern, "Pattern graph (graph6 or @file)");
  count->add_option("--family", count_args.family, "Family spec, resolved at the host order");
  count->add_option("--random", count_args.random_order, "Use a random host on N vertices");
  count->add_option("--density", count_args.density, "Edge probability of the random host")
      ->check(CLI::Range(0.0, 1.0));

  OracleArgs oracle_args;
  oracle_args.n = -1;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive extremal numbers");
  oracle->add_option("kind", oracle_args.kind, "ex | exa | exa-set | exa-prime | zeta")
      ->required()
      ->check(CLI::IsMember({"ex", "exa", "exa-set", "exa-prime", "zeta"}));
  oracle->add_option("--n", oracle_args.n, "Order");
  oracle->add_option("--family", oracle_args.family, "Family spec");
  oracle->add_option("--k", oracle_args.k, "Exact copy count (exa)");
  oracle->add_option("--set", oracle_args.set, "Allowed counts, comma separated (exa-set)");
  oracle->add_option("--graph", oracle_args.graph, "Graph for zeta (graph6 or @file)");
  oracle->add_flag("--allow-large", oracle_args.allow_large, "Permit orders 9 to 11");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Explicit extremal constructions");
  construct->add_option("kind", construct_args.kind, "klikk | triangle | kab | star")
      ->required()
      ->check(CLI::IsMember({"klikk", "triangle", "kab", "star"}));
  construct->add_option("--n", construct_args.n, "Order");
  construct->add_option("--r", construct_args.r, "Clique or star size");
  construct->add_option("--k", construct_args.k, "Number of copies");
  construct->add_option("--a", construct_args.a, "First part size (kab)");
  construct->add_option("--b", construct_args.b, "Second part size (kab)");
  construct->add_option("--parts", construct_args.parts,
                        "Partition pair such as 1,1/2 (kab; default: optimal)");

  MupArgs mup_args;
  auto* mup_cmd = app.add_subcommand("mup", "Unique partitions and mup(A,B)");
  mup_cmd->add_option("--a", mup_args.a, "A");
  mup_cmd->add_option("--b", mup_args.b, "B");
  mup_cmd->add_option("--check", mup_args.check, "Test a partition pair such as 3,3/2,2,2");
  mup_cmd->add_flag("--series", mup_args.series, "Tabulate mup(n, c) for c < n <= n-max");
  mup_cmd->add_option("--c", mup_args.c, "c for --series");
  mup_cmd->add_option("--n-max", mup_args.n_max, "Largest n for --series");

  GameArgs game_args;
  auto* game = app.add_subcommand("game", "Exact values of the edge-query game");
  game->add_option("kind", game_args.kind, "L | x | xprime | sweep")
      ->required()
      ->check(CLI::IsMember({"L", "x", "xprime", "sweep"}));
  game->add_option("--n", game_args.n, "Order");
  game->add_option("--family", game_args.family, "Family spec");
  game->add_flag("--no-symmetry", game_args.no_symmetry, "Disable vertex-permutation reduction");
  game->add_option("--max-states", game_args.max_states, "Memo size before giving up");
  game->add_option("--n-max", game_args.n_max, "Largest order (sweep)");
  game->add_option("--pattern-max", game_args.pattern_max, "Largest pattern order (sweep)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  verify->add_option("--suite", verify_args.suite, "Suite name or all")
      ->required()
      ->check(CLI::IsMember(suites));
  verify->add_option("--n-max", verify_args.n_max, "Largest order searched (0 = suite default)");

  std::vector<std::string> argv_store = {"exa"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(count_args, common, out);
    if (*oracle) return cmd_oracle(oracle_args, common, out);
    if (*construct) return cmd_construct(construct_args, common, out);
    if (*mup_cmd) return cmd_mup(mup_args, common, out);
    if (*game) return cmd_game(game_args, common, out);
    if (*verify) return cmd_verify(verify_args, common, out);
  } catch (const BudgetExceeded& e) {
    err << "unsolved: " << e.what() << '\n';
    return kUnsolved;
  } catch (const GameBudgetExceeded& e) {
    err << "unsolved: " << e.what() << '\n';
    return kUnsolved;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // GraphError and malformed input land here.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace exa::cli
