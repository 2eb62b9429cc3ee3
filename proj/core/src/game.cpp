#include "exa/game.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "exa/graph6.hpp"
#include "exa/oracle.hpp"

namespace exa {

// ---------------------------------------------------------------------------
// PlacementSet

PlacementSet::PlacementSet(std::size_t size, bool filled)
    : size_(size), words_((size + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
  if (filled && size % 64 != 0) words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
}

std::size_t PlacementSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool PlacementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PlacementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

PlacementSet PlacementSet::operator&(const PlacementSet& other) const {
  PlacementSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

PlacementSet PlacementSet::without(const PlacementSet& other) const {
  PlacementSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

// ---------------------------------------------------------------------------
// Game

GameState GameState::after(int pair, bool answer) const {
  GameState next = *this;
  (answer ? next.yes : next.no) |= PairMask{1} << pair;
  return next;
}

std::vector<Placement> placements(int n, const GraphFamily& family) {
  if (n < 1 || n > kMaxGameOrder)
    throw GraphError("game order must be in [1, " + std::to_string(kMaxGameOrder) + "]");
  const Graph host = complete_graph(n);
  std::vector<Placement> out;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const Pattern& pattern = family.patterns()[m];
    if (pattern.order() > n) continue;
    const EdgeSet edges = pattern.graph().edges();
    std::set<PairMask> seen;
    pattern.for_each_embedding(host, [&](std::span<const int> image) {
      PairMask mask = 0;
      for (const Edge& e : edges) mask |= PairMask{1} << pair_index(image[e.u], image[e.v]);
      seen.insert(mask);
      return true;
    });
    for (PairMask mask : seen)
      out.push_back({mask, static_cast<int>(m), pattern.edge_count()});
  }
  return out;
}

Game::Game(int n, GraphFamily family) : n_(n), family_(std::move(family)) {
  placements_ = exa::placements(n, family_);
  if (placements_.empty())
    throw GraphError("family '" + family_.name() + "' has no placement on " + std::to_string(n) +
                     " vertices");
  pairs_ = pair_table(n);
  all_pairs_ = pairs_.empty() ? 0 : (PairMask{1} << pairs_.size()) - 1;
  lex_pairs_.resize(pairs_.size());
  std::iota(lex_pairs_.begin(), lex_pairs_.end(), 0);
  std::sort(lex_pairs_.begin(), lex_pairs_.end(),
            [&](int a, int b) { return pairs_[a] < pairs_[b]; });
  containing_.assign(pairs_.size(), PlacementSet(placements_.size()));
  for (std::size_t p = 0; p < placements_.size(); ++p)
    for (std::size_t q = 0; q < pairs_.size(); ++q)
      if ((placements_[p].edges >> q) & 1U) containing_[q].set(p);
}

PlacementSet Game::consistent(const GameState& state) const {
  PlacementSet out(placements_.size());
  for (std::size_t p = 0; p < placements_.size(); ++p) {
    const PairMask e = placements_[p].edges;
    if ((e & state.yes) == state.yes && (e & state.no) == 0) out.set(p);
  }
  return out;
}

std::vector<Placement> Game::consistent_placements(const GameState& state) const {
  std::vector<Placement> out;
  consistent(state).for_each([&](std::size_t p) { out.push_back(placements_[p]); });
  return out;
}

PairMask Game::common_pairs(const PlacementSet& c) const {
  PairMask m = all_pairs_;
  c.for_each([&](std::size_t p) { m &= placements_[p].edges; });
  return m;
}

PairMask Game::covered_pairs(const PlacementSet& c) const {
  PairMask m = 0;
  c.for_each([&](std::size_t p) { m |= placements_[p].edges; });
  return m;
}

bool Game::is_valid(const GameState& state) const {
  return (state.yes & state.no) == 0 && ((state.yes | state.no) & ~all_pairs_) == 0 &&
         !consistent(state).empty();
}

EdgeSet Game::edges_of(PairMask mask) const {
  EdgeSet out;
  for (int q : lex_pairs_)
    if ((mask >> q) & 1U) out.push_back(pairs_[q]);
  return out;
}

bool adversary_no_first(const Game& game, const GameState& state, Edge query) {
  const int q = game.index_of(query);
  if (((state.yes | state.no) >> q) & 1U)
    throw StrategyError("pair " + to_string(query) + " was already asked");
  return game.consistent(state.after(q, false)).empty();
}

Adversary no_first_adversary(std::shared_ptr<const Game> game) {
  return [game](const GameState& state, Edge query) {
    return adversary_no_first(*game, state, query);
  };
}

// ---------------------------------------------------------------------------
// Solver

struct RelabelTables {
  int chunks = 0;
  std::vector<std::vector<int>> perms;
  // tables[perm][chunk][byte]
  std::vector<std::vector<std::array<PairMask, 256>>> tables;

  PairMask apply(std::size_t perm, PairMask mask) const {
    PairMask out = 0;
    const auto& t = tables[perm];
    for (int c = 0; c < chunks; ++c) out |= t[c][(mask >> (8 * c)) & 0xFF];
    return out;
  }
};

namespace {

constexpr int kMaxSymmetryOrder = 6;
constexpr int kNoShift = 28;  // pair masks of order <= 8 fit in 28 bits

std::shared_ptr<const RelabelTables> relabel_tables(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RelabelTables>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  auto t = std::make_shared<RelabelTables>();
  const int pairs = pair_count(n);
  t->chunks = (pairs + 7) / 8;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Edge> table = pair_table(n);
  do {
    std::vector<int> pair_map(pairs);
    for (int q = 0; q < pairs; ++q) pair_map[q] = pair_index(perm[table[q].u], perm[table[q].v]);
    std::vector<std::array<PairMask, 256>> slices(t->chunks);
    for (int c = 0; c < t->chunks; ++c) {
      for (int byte = 0; byte < 256; ++byte) {
        PairMask out = 0;
        for (int b = 0; b < 8; ++b) {
          const int q = 8 * c + b;
          if (q < pairs && ((byte >> b) & 1)) out |= PairMask{1} << pair_map[q];
        }
        slices[c][byte] = out;
      }
    }
    t->perms.push_back(perm);
    t->tables.push_back(std::move(slices));
  } while (std::next_permutation(perm.begin(), perm.end()));
  cache[n] = t;
  return t;
}

int ceil_log2(std::size_t x) {
  int bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

}  // namespace

GameSolver::GameSolver(std::shared_ptr<const Game> game, GameCost cost, SolverOptions options)
    : game_(std::move(game)), cost_(cost), options_(options) {
  if (options_.symmetry && game_->order() <= kMaxSymmetryOrder)
    relabel_ = relabel_tables(game_->order());
  if (options_.budget_seconds > 0)
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(options_.budget_seconds));
}

int GameSolver::terminal(const PlacementSet& c) const {
  return cost_ == GameCost::kProof ? game_->placements()[c.first()].edge_count : 0;
}

int GameSolver::lower_bound(const PlacementSet& c) const {
  switch (cost_) {
    case GameCost::kQueries:
      return ceil_log2(c.count());
    case GameCost::kNoAnswers:
      return 0;
    case GameCost::kProof: {
      int best = INT_MAX;
      c.for_each([&](std::size_t p) { best = std::min(best, game_->placements()[p].edge_count); });
      return best;
    }
  }
  return 0;
}

std::uint64_t GameSolver::key(const PlacementSet& c) const {
  const PairMask yes = game_->common_pairs(c);
  const PairMask no = game_->all_pairs() & ~game_->covered_pairs(c);
  std::uint64_t best = yes | (no << kNoShift);
  if (!relabel_) return best;
  for (std::size_t p = 0; p < relabel_->perms.size(); ++p)
    best = std::min(best, relabel_->apply(p, yes) | (relabel_->apply(p, no) << kNoShift));
  return best;
}

int GameSolver::value(const PlacementSet& c) {
  if (c.count() == 1) return terminal(c);
  const std::uint64_t k = key(c);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  if (memo_.size() >= options_.max_states)
    throw GameBudgetExceeded("game solver exceeded " + std::to_string(options_.max_states) +
                             " states");
  if (options_.budget_seconds > 0 && memo_.size() % 4096 == 0 &&
      std::chrono::steady_clock::now() >= deadline_)
    throw GameBudgetExceeded("game solver ran out of time");

  const int yes_cost = cost_ == GameCost::kQueries ? 1 : 0;
  const PairMask informative = game_->covered_pairs(c) & ~game_->common_pairs(c);
  const int floor = lower_bound(c);
  int best = INT_MAX;
  for (int q : game_->lex_pairs()) {
    if (!((informative >> q) & 1U)) continue;
    int v = 1 + value(c.without(game_->containing(q)));
    if (v >= best) continue;
    v = std::max(v, yes_cost + value(c & game_->containing(q)));
    if (v < best) {
      best = v;
      if (best <= floor) break;
    }
  }
  memo_.emplace(k, static_cast<std::int16_t>(best));
  return best;
}

int GameSolver::query_value(const PlacementSet& c, int pair) {
  const int yes_cost = cost_ == GameCost::kQueries ? 1 : 0;
  const PlacementSet no = c.without(game_->containing(pair));
  const PlacementSet yes = c & game_->containing(pair);
  int v = INT_MIN;
  if (!no.empty()) v = std::max(v, 1 + value(no));
  if (!yes.empty()) v = std::max(v, yes_cost + value(yes));
  return v;
}

Edge GameSolver::best_query(const GameState& state) {
  const PlacementSet c = game_->consistent(state);
  if (c.count() < 2) throw StrategyError("best_query called on a finished state");
  const PairMask informative = game_->covered_pairs(c) & ~game_->common_pairs(c);
  int best = INT_MAX;
  int choice = -1;
  for (int q : game_->lex_pairs()) {
    if (!((informative >> q) & 1U)) continue;
    const int v = query_value(c, q);
    if (v < best) {
      best = v;
      choice = q;
    }
  }
  return game_->pair(choice);
}

GameValue solve_game(const Game& game, GameCost cost, const SolverOptions& options) {
  if (game.order() > kMaxSymmetryOrder || (game.order() == kMaxSymmetryOrder && !options.symmetry))
    throw GraphError("exact game solving supports n <= 5, or n = 6 with symmetry reduction");
  auto shared = std::make_shared<const Game>(game);
  const PlacementSet root = shared->all();
  GameValue out;
  if (root.count() == 1) {
    out.value = GameSolver(shared, cost, options).value(root);
    return out;
  }

  const PairMask informative = shared->covered_pairs(root) & ~shared->common_pairs(root);
  std::vector<int> candidates;
  for (int q : shared->lex_pairs())
    if ((informative >> q) & 1U) candidates.push_back(q);

  // Orbit representatives under the permutations fixing the root state.
  std::vector<int> representative(shared->pair_total());
  std::iota(representative.begin(), representative.end(), 0);
  if (options.symmetry) {
    auto tables = relabel_tables(shared->order());
    const PairMask yes = shared->common_pairs(root);
    const PairMask no = shared->all_pairs() & ~shared->covered_pairs(root);
    std::vector<int> lex_rank(shared->pair_total());
    for (std::size_t i = 0; i < shared->lex_pairs().size(); ++i)
      lex_rank[shared->lex_pairs()[i]] = static_cast<int>(i);
    for (std::size_t p = 0; p < tables->perms.size(); ++p) {
      if (tables->apply(p, yes) != yes || tables->apply(p, no) != no) continue;
      for (int q : candidates) {
        const int image = std::countr_zero(tables->apply(p, PairMask{1} << q));
        if (lex_rank[representative[image]] > lex_rank[representative[q]])
          representative[image] = representative[q];
      }
    }
    // Images found later may still point at non-minimal members; settle them.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int q : candidates)
        if (representative[representative[q]] != representative[q]) {
          representative[q] = representative[representative[q]];
          changed = true;
        }
    }
  }

  std::vector<int> tasks;
  for (int q : candidates)
    if (representative[q] == q) tasks.push_back(q);

  std::vector<int> values(tasks.size(), 0);
  std::vector<std::uint64_t> states(tasks.size(), 0);
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> next{0};
  const auto start = std::chrono::steady_clock::now();
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      SolverOptions task_options = options;
      if (options.budget_seconds > 0) {
        const double used =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (used >= options.budget_seconds) {
          exhausted = true;
          continue;
        }
        task_options.budget_seconds = options.budget_seconds - used;
      }
      GameSolver solver(shared, cost, task_options);
      try {
        values[i] = solver.query_value(root, tasks[i]);
      } catch (const GameBudgetExceeded&) {
        exhausted = true;
      }
      states[i] = solver.states();
    }
  };
  const int threads = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  out.states_explored = std::accumulate(states.begin(), states.end(), std::uint64_t{0});
  if (exhausted) {
    out.complete = false;
    return out;
  }
  std::map<int, int> value_of_rep;
  for (std::size_t i = 0; i < tasks.size(); ++i) value_of_rep[tasks[i]] = values[i];
  const int best = *std::min_element(values.begin(), values.end());
  out.value = best;
  for (int q : candidates)
    if (value_of_rep[representative[q]] == best) out.first_moves.push_back(shared->pair(q));
  return out;
}

GameValue solve_L(int n, const GraphFamily& family, const SolverOptions& options) {
  return solve_game(Game(n, family), GameCost::kQueries, options);
}

GameValue solve_x(int n, const GraphFamily& family, const SolverOptions& options) {
  return solve_game(Game(n, family), GameCost::kNoAnswers, options);
}

GameValue solve_x_prime(int n, const GraphFamily& family, const SolverOptions& options) {
  return solve_game(Game(n, family), GameCost::kProof, options);
}

int no_first_min_no_answers(const Game& game) {
  std::unordered_map<std::uint64_t, int> memo;
  auto rec = [&](auto&& self, const PlacementSet& c) -> int {
    if (c.count() == 1) return 0;
    const PairMask common = game.common_pairs(c);
    const PairMask covered = game.covered_pairs(c);
    const std::uint64_t k = common | ((game.all_pairs() & ~covered) << kNoShift);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    int best = INT_MAX;
    const PairMask informative = covered & ~common;
    for (int q : game.lex_pairs())
      if ((informative >> q) & 1U)
        best = std::min(best, 1 + self(self, c.without(game.containing(q))));
    memo.emplace(k, best);
    return best;
  };
  return rec(rec, game.all());
}

// ---------------------------------------------------------------------------
// Strategies and simulation

Transcript simulate(const Game& game, const Questioner& questioner, const Adversary& adversary) {
  Transcript t;
  GameState state;
  PlacementSet c = game.all();
  while (c.count() > 1) {
    Edge q = questioner(state);
    if (q.u > q.v) std::swap(q.u, q.v);
    if (q.u < 0 || q.v >= game.order() || q.u == q.v)
      throw StrategyError("questioner produced an invalid pair " + to_string(q));
    const int idx = game.index_of(q);
    if (((state.yes | state.no) >> idx) & 1U)
      throw StrategyError("questioner repeated pair " + to_string(q));
    const bool yes = adversary(state, q);
    const GameState next = state.after(idx, yes);
    PlacementSet after = game.consistent(next);
    if (after.empty())
      throw StrategyError("adversary answered " + std::string(yes ? "YES" : "NO") + " on " +
                          to_string(q) + " leaving no consistent placement");
    t.steps.push_back({q, yes});
    ++t.total_queries;
    ++(yes ? t.yes_answers : t.no_answers);
    state = next;
    c = std::move(after);
  }
  const Placement& p = game.placements()[c.first()];
  t.final_placement = game.edges_of(p.edges);
  t.member = p.member;
  t.forced_remaining = p.edge_count - std::popcount(state.yes);
  return t;
}

Questioner questioner_extremal_strategy(std::shared_ptr<const Game> game, const Graph& pattern,
                                        const Graph& extremal) {
  const Graph stripped = strip_isolated(pattern);
  if (!is_connected(stripped)) throw GraphError("extremal strategy needs a connected pattern");
  if (extremal.order() != game->order())
    throw GraphError("extremal graph order differs from the game order");
  if (Pattern(stripped).copies(extremal, 1) != 1)
    throw GraphError("extremal graph must contain exactly one copy of the pattern");

  std::vector<int> non_edges;
  for (int q : game->lex_pairs()) {
    const Edge e = game->pair(q);
    if (!extremal.has_edge(e.u, e.v)) non_edges.push_back(q);
  }
  return [game, non_edges](const GameState& state) -> Edge {
    const PairMask asked = state.yes | state.no;
    if (state.yes == 0) {
      for (int q : non_edges)
        if (!((asked >> q) & 1U)) return game->pair(q);
    } else {
      VertexSet touched = 0;
      for (const Edge& e : game->edges_of(state.yes))
        touched |= (VertexSet{1} << e.u) | (VertexSet{1} << e.v);
      for (int q : game->lex_pairs()) {
        const Edge e = game->pair(q);
        if (!((asked >> q) & 1U) && (((touched >> e.u) | (touched >> e.v)) & 1U)) return e;
      }
    }
    for (int q : game->lex_pairs())
      if (!((asked >> q) & 1U)) return game->pair(q);
    throw StrategyError("extremal strategy has no pair left to ask");
  };
}

Questioner solver_questioner(std::shared_ptr<GameSolver> solver) {
  return [solver](const GameState& state) { return solver->best_query(state); };
}

Questioner matching_first_star_questioner(std::shared_ptr<const Game> game) {
  return [game](const GameState& state) -> Edge {
    const int n = game->order();
    const PairMask asked = state.yes | state.no;
    for (int u = 0; u + 1 < n; u += 2) {
      const int q = pair_index(u, u + 1);
      if ((state.yes >> q) & 1U) {
        for (int w = 0; w < n; ++w) {
          if (w == u || w == u + 1) continue;
          if (!((asked >> pair_index(u, w)) & 1U)) return {std::min(u, w), std::max(u, w)};
          break;
        }
        break;
      }
      if (!((asked >> q) & 1U)) return {u, u + 1};
    }
    for (int q : game->lex_pairs())
      if (!((asked >> q) & 1U)) return game->pair(q);
    throw StrategyError("matching-first strategy has no pair left to ask");
  };
}

WorstCase worst_case_against_all(const Game& game, const Questioner& questioner) {
  std::map<std::pair<PairMask, PairMask>, WorstCase> memo;
  auto rec = [&](auto&& self, const GameState& state) -> WorstCase {
    if (game.consistent(state).count() == 1) return {};
    if (auto it = memo.find({state.yes, state.no}); it != memo.end()) return it->second;
    Edge q = questioner(state);
    if (q.u > q.v) std::swap(q.u, q.v);
    const int idx = game.index_of(q);
    if (((state.yes | state.no) >> idx) & 1U)
      throw StrategyError("questioner repeated pair " + to_string(q));
    WorstCase worst{-1, -1};
    for (bool yes : {false, true}) {
      const GameState next = state.after(idx, yes);
      if (game.consistent(next).empty()) continue;
      const WorstCase child = self(self, next);
      worst.queries = std::max(worst.queries, 1 + child.queries);
      worst.no_answers = std::max(worst.no_answers, (yes ? 0 : 1) + child.no_answers);
    }
    memo[{state.yes, state.no}] = worst;
    return worst;
  };
  return rec(rec, GameState{});
}

std::vector<SweepRow> sweep_games(int n_max, int pattern_max, const SolverOptions& options) {
  std::vector<SweepRow> rows;
  for (const Graph& pattern : all_patterns(pattern_max)) {
    const std::string code = encode_graph6(pattern);
    for (int n = pattern.order(); n <= n_max; ++n) {
      const GraphFamily family("g6:" + code, {pattern});
      const Game game(n, family);
      SweepRow row;
      row.pattern_graph6 = code;
      row.n = n;
      row.exa1 = *exa_oracle(n, 1, family).value;
      row.exa1_prime = *exa_prime_oracle(n, family).value;
      row.x = *solve_game(game, GameCost::kNoAnswers, options).value;
      row.L = *solve_game(game, GameCost::kQueries, options).value;
      row.x_prime = *solve_game(game, GameCost::kProof, options).value;
      row.gap_x = row.x - (pair_count(n) - row.exa1);
      row.gap_x_prime = row.x_prime - (pair_count(n) - row.exa1_prime);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string to_json(const GameValue& value) {
  nlohmann::ordered_json doc;
  doc["value"] = value.value ? nlohmann::ordered_json(*value.value) : nullptr;
  auto moves = nlohmann::ordered_json::array();
  for (const Edge& e : value.first_moves) moves.push_back({e.u, e.v});
  doc["first_moves"] = std::move(moves);
  doc["states_explored"] = value.states_explored;
  doc["complete"] = value.complete;
  return doc.dump();
}

std::string to_json(const Transcript& transcript) {
  nlohmann::ordered_json doc;
  auto steps = nlohmann::ordered_json::array();
  for (const TranscriptStep& s : transcript.steps)
    steps.push_back({{"query", {s.query.u, s.query.v}}, {"answer", s.yes ? "YES" : "NO"}});
  doc["steps"] = std::move(steps);
  auto placement = nlohmann::ordered_json::array();
  for (const Edge& e : transcript.final_placement) placement.push_back({e.u, e.v});
  doc["final_placement"] = std::move(placement);
  doc["total_queries"] = transcript.total_queries;
  doc["no_answers"] = transcript.no_answers;
  doc["yes_answers"] = transcript.yes_answers;
  doc["forced_remaining"] = transcript.forced_remaining;
  return doc.dump();
}

}  // namespace exa
