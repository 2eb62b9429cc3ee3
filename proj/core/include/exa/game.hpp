#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exa/family.hpp"
#include "exa/graph.hpp"

namespace exa {

// Bit pair_index(u, v) stands for the vertex pair {u, v}.
using PairMask = std::uint64_t;

inline constexpr int kMaxGameOrder = 8;

class StrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GameBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A labeled copy of a family member inside K_n.
struct Placement {
  PairMask edges = 0;
  int member = 0;
  int edge_count = 0;
};

// Fixed-width set of placement indices.
class PlacementSet {
 public:
  PlacementSet() = default;
  explicit PlacementSet(std::size_t size, bool filled = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const;
  bool empty() const;
  std::size_t first() const;

  PlacementSet operator&(const PlacementSet& other) const;
  PlacementSet without(const PlacementSet& other) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const PlacementSet&, const PlacementSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Queries answered so far; every other pair is unasked.
struct GameState {
  PairMask yes = 0;
  PairMask no = 0;

  GameState after(int pair, bool answer) const;
  friend bool operator==(const GameState&, const GameState&) = default;
};

// The edge-query game on n vertices for a family: all placements plus the
// consistency bookkeeping shared by strategies and solvers.
class Game {
 public:
  Game(int n, GraphFamily family);

  int order() const { return n_; }
  int pair_total() const { return pair_count(n_); }
  PairMask all_pairs() const { return all_pairs_; }
  const GraphFamily& family() const { return family_; }
  const std::vector<Placement>& placements() const { return placements_; }
  const PlacementSet& containing(int pair) const { return containing_[pair]; }
  Edge pair(int index) const { return pairs_[index]; }
  int index_of(Edge e) const { return pair_index(e.u, e.v); }
  // Pair indices in lexicographic (u, v) order.
  const std::vector<int>& lex_pairs() const { return lex_pairs_; }

  PlacementSet all() const { return PlacementSet(placements_.size(), true); }
  // Placements P with yes within P and P disjoint from no.
  PlacementSet consistent(const GameState& state) const;
  std::vector<Placement> consistent_placements(const GameState& state) const;

  // Pairs in every / in some placement of c.
  PairMask common_pairs(const PlacementSet& c) const;
  PairMask covered_pairs(const PlacementSet& c) const;

  bool is_valid(const GameState& state) const;
  EdgeSet edges_of(PairMask mask) const;

 private:
  int n_;
  GraphFamily family_;
  PairMask all_pairs_ = 0;
  std::vector<Edge> pairs_;
  std::vector<int> lex_pairs_;
  std::vector<Placement> placements_;
  std::vector<PlacementSet> containing_;
};

// All labeled copies of members in K_n, deduplicated as edge sets.
std::vector<Placement> placements(int n, const GraphFamily& family);

using Questioner = std::function<Edge(const GameState&)>;
// Returns true for YES.
using Adversary = std::function<bool(const GameState&, Edge)>;

// Answers NO whenever a consistent placement avoids the pair.
bool adversary_no_first(const Game& game, const GameState& state, Edge query);
Adversary no_first_adversary(std::shared_ptr<const Game> game);

enum class GameCost {
  kQueries,    // L: every query counts
  kNoAnswers,  // x: only NO answers count
  kProof,      // x': every query counts and the found copy must be fully asked
};

struct SolverOptions {
  // Canonicalise states under vertex permutations (orders up to 6).
  bool symmetry = true;
  std::uint64_t max_states = 20'000'000;
  // Wall-clock budget in seconds; 0 means unlimited.
  double budget_seconds = 0;
  // Root branches solved in parallel; results do not depend on this.
  int jobs = 1;
};

struct GameValue {
  std::optional<int> value;
  // Optimal first queries in lexicographic order.
  std::vector<Edge> first_moves;
  std::uint64_t states_explored = 0;
  bool complete = true;
};

// Byte-sliced pair relabeling tables, one per vertex permutation.
struct RelabelTables;

// Exact minimax over adaptive adversaries. A state's value depends only on
// its set C of consistent placements, memoised under the normalised pair
// (pairs common to C, pairs outside every member of C). Only queries that
// split C are tried.
class GameSolver {
 public:
  GameSolver(std::shared_ptr<const Game> game, GameCost cost, SolverOptions options = {});

  const Game& game() const { return *game_; }

  int value(const PlacementSet& c);
  int value(const GameState& state) { return value(game_->consistent(state)); }
  // Value of asking pair q at c, the adversary answering to maximise.
  int query_value(const PlacementSet& c, int pair);
  // Smallest lexicographic optimal query; requires an unfinished state.
  Edge best_query(const GameState& state);

  std::uint64_t states() const { return memo_.size(); }

 private:
  int terminal(const PlacementSet& c) const;
  int lower_bound(const PlacementSet& c) const;
  std::uint64_t key(const PlacementSet& c) const;

  std::shared_ptr<const Game> game_;
  GameCost cost_;
  SolverOptions options_;
  std::shared_ptr<const RelabelTables> relabel_;
  std::unordered_map<std::uint64_t, std::int16_t> memo_;
  std::chrono::steady_clock::time_point deadline_;
};

GameValue solve_game(const Game& game, GameCost cost, const SolverOptions& options = {});
GameValue solve_L(int n, const GraphFamily& family, const SolverOptions& options = {});
GameValue solve_x(int n, const GraphFamily& family, const SolverOptions& options = {});
GameValue solve_x_prime(int n, const GraphFamily& family, const SolverOptions& options = {});

// Fewest NO answers any questioner can finish with against the NO-first
// adversary.
int no_first_min_no_answers(const Game& game);

struct TranscriptStep {
  Edge query;
  bool yes = false;
};

struct Transcript {
  std::vector<TranscriptStep> steps;
  EdgeSet final_placement;
  int member = 0;
  int total_queries = 0;
  int no_answers = 0;
  int yes_answers = 0;
  // Unasked edges of the identified copy, asked afterwards in the x' game.
  int forced_remaining = 0;
};

// Plays until exactly one placement is consistent. Throws StrategyError when
// a questioner repeats a pair or an adversary leaves no consistent placement.
Transcript simulate(const Game& game, const Questioner& questioner, const Adversary& adversary);

// Questioner that asks every non-edge of extremal, and after the first YES
// asks pairs at the endpoints of known edges until the copy is pinned down.
// Requires extremal to hold exactly one copy of a connected pattern.
Questioner questioner_extremal_strategy(std::shared_ptr<const Game> game, const Graph& pattern,
                                        const Graph& extremal);

// Questioner that follows a solver's optimal queries.
Questioner solver_questioner(std::shared_ptr<GameSolver> solver);

// For spanning stars: ask the matching (0,1), (2,3), ...; after a YES on uv,
// ask uw for the smallest other w.
Questioner matching_first_star_questioner(std::shared_ptr<const Game> game);

struct WorstCase {
  int queries = 0;
  int no_answers = 0;
};

// Exhaustive play of a fixed questioner against every valid adversary.
WorstCase worst_case_against_all(const Game& game, const Questioner& questioner);

struct SweepRow {
  std::string pattern_graph6;
  int n = 0;
  int exa1 = 0;
  int exa1_prime = 0;
  int x = 0;
  int L = 0;
  int x_prime = 0;
  // x - (C(n,2) - exa1) and x' - (C(n,2) - exa1').
  int gap_x = 0;
  int gap_x_prime = 0;
};

// Every pattern with at most pattern_max vertices (no isolated vertices) on
// every n from its order to n_max.
std::vector<SweepRow> sweep_games(int n_max, int pattern_max, const SolverOptions& options = {});

std::string to_json(const GameValue& value);
std::string to_json(const Transcript& transcript);

}  // namespace exa
