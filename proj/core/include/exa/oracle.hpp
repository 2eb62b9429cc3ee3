#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "exa/count.hpp"
#include "exa/family.hpp"
#include "exa/graph.hpp"

namespace exa {

struct OracleOptions {
  // Worker threads. Results do not depend on this.
  int jobs = 1;
  // Wall-clock budget in seconds; 0 means unlimited.
  double budget_seconds = 0;
  // Unrestricted search is guarded at n <= 8; this lifts the guard to 11.
  bool allow_large = false;
};

// Outcome of an exhaustive maximisation over all labeled graphs of order n.
struct OracleResult {
  // Absent when no graph qualifies, or when the search ran out of budget.
  std::optional<int> value;
  std::optional<Graph> witness;
  // Family member carried by the witness (exa_prime_oracle only).
  std::optional<int> member;
  // Graphs examined, counted in enumeration order up to the witness.
  std::uint64_t explored = 0;
  bool complete = true;
  double elapsed_seconds = 0;
};

using GraphPredicate = std::function<bool(const Graph&)>;

// Largest edge count of a graph on n labeled vertices satisfying pred. Levels
// are searched from C(n,2) edges downwards; each level enumerates whichever of
// the edge set or its complement is smaller, in colex order, and the search
// stops at the first level with a hit. The witness is the first hit in that
// order.
OracleResult max_edges_with(int n, const GraphPredicate& pred,
                            const OracleOptions& options = {});

// ex(n, F): no copy of any member.
OracleResult ex_oracle(int n, const GraphFamily& family, const OracleOptions& options = {});

// exa_k(n, F): exactly k copies in total.
OracleResult exa_oracle(int n, Count k, const GraphFamily& family,
                        const OracleOptions& options = {});

// exa_A(n, F): total copy count lies in the set A.
OracleResult exa_set_oracle(int n, std::span<const Count> allowed, const GraphFamily& family,
                            const OracleOptions& options = {});

// exa'_1(n, F): max |E(G)| - |E(F)| over G holding exactly one copy of one
// member F and no copy of any other member. Ties resolve to the smallest
// graph6 string of G, so every level that could tie is scanned in full.
OracleResult exa_prime_oracle(int n, const GraphFamily& family,
                              const OracleOptions& options = {});

struct ZetaResult {
  int value = 0;
  // F plus the new vertex (last label) attached to value vertices.
  Graph witness;
};

// Largest z such that attaching a new vertex by z edges to F leaves exactly
// one copy of F. Orders up to 8.
ZetaResult zeta(const Graph& f);

// {"value", "witness_graph6", "explored", "complete"}; absent values are null.
std::string to_json(const OracleResult& result);

}  // namespace exa
