#pragma once

#include <string>

#include "exa/count.hpp"
#include "exa/graph.hpp"
#include "exa/partitions.hpp"

namespace exa {

// An explicit graph together with the edge and copy counts it is supposed to
// have. Actual counts are always recomputed from the graph.
struct ConstructionReport {
  std::string name;
  Graph graph;
  long expected_edges = 0;
  long actual_edges = 0;
  Count expected_copies = 0;
  Count actual_copies = 0;
  bool ok = false;
};

// K_r on vertices 0..r-1 plus a Turan graph T(n-r, r-1) on classes
// V_1..V_{r-1}; every vertex of V_i is joined to the clique except v_i and
// v_{i+1}. One copy of K_r and C(r,2) + (r-2)(n-r) + ex(n-r, K_r) edges.
ConstructionReport build_klikk(int n, int r);

// K_{floor((n-1)/2), ceil((n-1)/2)} (smaller class first) plus an apex vertex,
// labeled last, adjacent to one vertex of the smaller class and k vertices of
// the larger. Exactly k triangles and floor((n-1)^2/4) + k + 1 edges.
ConstructionReport build_triangle_k(int n, int k);

// Complement of the path forest on parts_a then parts_b. For a unique
// partition this holds exactly one spanning K_{A,B}.
ConstructionReport build_unique_kab(int a, int b, const PartitionPair& pp);

// n/r disjoint copies of K_r plus k/2 edges, each joining a fresh vertex of
// component 2i to a fresh vertex of component 2i+1. Exactly k copies of the
// star with r leaves and n(r-1)/2 + k/2 edges.
ConstructionReport build_star_k(int n, int r, int k);

std::string to_json(const ConstructionReport& report);

}  // namespace exa
