#pragma once

#include <vector>

#include "ftsp/graph.hpp"

namespace ftsp {

// Family of paths to hit. Members keep path order because selection truncates
// each member to its first `min_size` vertices.
struct PathFamily {
    std::vector<std::vector<int>> members;
    int min_size = 1;  // guaranteed minimum vertex count of each member

    int q() const { return static_cast<int>(members.size()); }
};

struct PivotSet {
    std::vector<int> pivots;  // ascending

    bool contains(int v) const;
};

// ceil((n / L) * ln q) + 1, the greedy selection size bound.
long long greedy_size_bound(int n, int L, int q);

// Deterministic greedy max-coverage selection: repeatedly pick the vertex on
// the most surviving members (ties by smallest label), drop the members it
// hits, until none survive. Members are truncated to their first `min_size`
// vertices up front. Runs in O(qL log) via per-vertex counters and an ordered
// index. With `check_invariants` the counter/surviving-member loop invariant
// is re-verified after every extraction.
PivotSet greedy_pivot_selection(const PathFamily& family, int n_universe,
                                bool check_invariants = false);

// True iff every member intersects the pivot set. Test oracle.
bool verify_hitting(const PathFamily& family, const PivotSet& pivots);

}  // namespace ftsp
