#pragma once

#include <optional>
#include <vector>

#include "ftsp/graph.hpp"
#include "ftsp/hitting_set.hpp"
#include "ftsp/op_counters.hpp"

namespace ftsp {

// Tie-broken shortest s-t path of the input graph plus a per-vertex position
// index inverting the vertex list (-1 off path).
struct BasePath {
    Path path;
    std::vector<int> position;

    int k() const { return static_cast<int>(path.vertices.size()) - 1; }
    int vertex(int i) const { return path.vertices[i]; }
};

// rd[i][j] = d_G'(v_i, v_{i+j}) when that value is at most ceil(sqrt(n)),
// else infinity. Spans j run 0..ceil(sqrt(n)) inclusive: a detour of at most
// ceil(sqrt(n)) edges can bridge at most that many path positions, and the
// exactly-sqrt(n)-span case must be representable.
struct RdTable {
    int sqrt_n = 0;  // ceil(sqrt(n))
    std::vector<std::vector<Hops>> rd;  // (k+1) rows, sqrt_n+1 columns

    Hops at(int i, int j) const { return rd[i][j]; }
};

// One canonical detour per vertex of V_sqrt: a shortest path in G' from
// v_{rho(x)} to x of exactly ceil(sqrt(n)) edges, where rho(x) is the minimum
// path index at distance exactly ceil(sqrt(n)) and all earlier indices are
// strictly farther. Vertices on the base path are excluded from V_sqrt.
struct DetourEntry {
    int x = -1;
    int rho = -1;
    Path detour;
};

struct DetourSet {
    std::vector<DetourEntry> entries;  // ascending by x
};

// How a per-edge optimum was realized; enough to rebuild a witness on demand.
struct ShortWin {
    int a = 0, b = 0;
};
struct LongWin {
    int pivot = -1;
    int j_in = 0, j_out = 0;
};

struct RpResult {
    BasePath base;
    std::vector<Hops> lengths;               // per base-path edge, kInfHops if none
    std::vector<std::optional<ShortWin>> short_wins;
    std::vector<std::optional<LongWin>> long_wins;
};

enum class DetourAlgo { kTrees, kDecremental };

// BFS + tie-broken parent trace. Throws NoPathError when t is unreachable.
BasePath compute_base_path(const Graph& g, int s, int t, OpCounters* ops = nullptr);

// The graph with the base path's edges removed.
Graph strip_base_path(const Graph& g, const BasePath& base);

// Short-detour table via 2*ceil(sqrt(n)) phases of Dijkstra on the auxiliary
// graph G^A (new source wired to every other path vertex block).
RdTable compute_rd_table(const Graph& g_prime, const BasePath& base, int n,
                         OpCounters* ops = nullptr);

// Sliding-window minimum of a + rd[a][b-a] + (k-b) per path edge, maintained
// by an ordered structure with one batch of insertions and deletions per step.
std::vector<Hops> short_detour_lengths(const BasePath& base, const RdTable& rd,
                                       std::vector<ShortWin>* wins = nullptr,
                                       OpCounters* ops = nullptr);

// D_n via the 2*ceil(sqrt(n)) shortest-path-tree scan, then an exact
// membership filter (the raw scan can emit vertices violating rho-minimality).
DetourSet compute_detour_set_trees(const Graph& g, const BasePath& base,
                                   OpCounters* ops = nullptr);

// D_n via the decremental trimmed-tree algorithm; epsilon path weights are
// realized as lexicographic (non-path-edge count, path-edge count) pairs.
// Per-vertex subtree membership counts are reported through `memberships`
// when given (each must stay at most ceil(sqrt(n)) + 1).
DetourSet compute_detour_set_decremental(const Graph& g, const BasePath& base,
                                         std::vector<int>* memberships = nullptr,
                                         OpCounters* ops = nullptr);

// Greedy hitting set over the detour paths (each has ceil(sqrt(n))+1 vertices).
PivotSet select_long_pivots(const DetourSet& d, int n);

// Per-edge best replacement through any pivot: two BFS trees per pivot in G'
// and the sliding Q_in/Q_out scheme with keys j + d_G'(v_j, r) and
// d_G'(r, v_j) + (k - j).
std::vector<Hops> long_detour_lengths(const Graph& g_prime, const BasePath& base,
                                      const PivotSet& pivots,
                                      std::vector<LongWin>* wins = nullptr,
                                      OpCounters* ops = nullptr);

struct RpOptions {
    DetourAlgo detour_algo = DetourAlgo::kTrees;
};

// d_G(s,t,e) for every edge of the tie-broken shortest s-t path: the per-edge
// minimum of the short and long candidates. Ties report the short value.
RpResult replacement_paths(const Graph& g, int s, int t, const RpOptions& opts = {},
                           OpCounters* ops = nullptr);

// Rebuilds a concrete witness path for edge index i (prefix + detour + suffix
// for long wins; window pair + a G' trace for short wins).
std::optional<Path> reconstruct_witness(const Graph& g, const RpResult& result, int i);

// min over base-path edges of d_G(s,t,e); the k=2 simple-shortest-path case.
Hops second_shortest_path(const Graph& g, int s, int t, const RpOptions& opts = {});

}  // namespace ftsp
