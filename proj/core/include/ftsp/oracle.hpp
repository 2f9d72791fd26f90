#pragma once

#include <vector>

#include "ftsp/graph.hpp"

namespace ftsp {

// Brute-force reference implementations used by tests and the CLI verifier.
// This module deliberately depends on graph primitives only, never on the
// replacement-paths or dso machinery it checks.

// The tie-broken shortest s-t path of a unit graph: BFS distances, parents by
// smallest tight predecessor label. Throws NoPathError when t is unreachable.
std::vector<int> oracle_base_path(const Graph& g, int s, int t);

// d_G(s,t,e) for every edge e of the base path, by one BFS per removed edge.
std::vector<Hops> naive_replacement_paths(const Graph& g, int s, int t);

// Exact d_G(s,t,F): Dijkstra on the subgraph G \ F.
Weight naive_dso_distance(const Graph& g, int s, int t, const FaultSet& faults);

// Indices i of base-path edges e_i such that a replacement exists but no
// optimal replacement has a detour of at most ceil(sqrt(n)) edges. Decided
// exactly from per-path-vertex distances in G' = G \ E(P): edge e_i has a
// short-detour optimum iff some indices a <= i < b satisfy
// a + d_G'(v_a, v_b) + (k - b) = d_G(s,t,e_i) with d_G'(v_a, v_b) <= ceil(sqrt(n)).
std::vector<int> enumerate_long_triples(const Graph& g, int s, int t);

}  // namespace ftsp
