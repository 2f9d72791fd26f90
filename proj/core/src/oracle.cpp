#include "ftsp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ftsp/errors.hpp"
#include "ftsp/shortest_paths.hpp"

namespace ftsp {

std::vector<int> oracle_base_path(const Graph& g, int s, int t) {
    std::vector<Hops> dist = bfs(g, s);
    if (dist[t] == kInfHops) throw NoPathError("oracle_base_path: t unreachable");
    std::vector<int> rev{t};
    int cur = t;
    while (cur != s) {
        int best = -1;
        for (const Adj& e : g.in(cur)) {
            if (dist[e.to] + 1 == dist[cur]) {
                best = e.to;  // in-lists are source-sorted: first tight one wins
                break;
            }
        }
        cur = best;
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<Hops> naive_replacement_paths(const Graph& g, int s, int t) {
    std::vector<int> base = oracle_base_path(g, s, t);
    std::vector<Hops> out;
    out.reserve(base.size() - 1);
    for (size_t i = 0; i + 1 < base.size(); ++i) {
        Graph ge = g.without_edges({{base[i], base[i + 1]}});
        out.push_back(bfs(ge, s)[t]);
    }
    return out;
}

Weight naive_dso_distance(const Graph& g, int s, int t, const FaultSet& faults) {
    if (faults.has_vertex(s) || faults.has_vertex(t)) return kInfWeight;
    std::vector<Edge> kept;
    bool negative = false;
    kept.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        if (faults.has_vertex(e.u) || faults.has_vertex(e.v)) continue;
        if (faults.has_edge(e.u, e.v)) continue;
        if (e.w < 0) negative = true;
        kept.push_back(e);
    }
    Graph sub(g.n(), std::move(kept), g.unit_weighted());
    if (!negative) return dijkstra(sub, s).dist[t];

    // Bellman-Ford for negative inputs (assumes no negative cycle)
    std::vector<Weight> dist(sub.n(), kInfWeight);
    dist[s] = 0;
    for (int round = 0; round < sub.n(); ++round) {
        bool changed = false;
        for (const Edge& e : sub.edges()) {
            if (dist[e.u] != kInfWeight && dist[e.u] + e.w < dist[e.v]) {
                dist[e.v] = dist[e.u] + e.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist[t];
}

std::vector<int> enumerate_long_triples(const Graph& g, int s, int t) {
    std::vector<int> base = oracle_base_path(g, s, t);
    const int k = static_cast<int>(base.size()) - 1;
    const Hops sq = static_cast<Hops>(std::ceil(std::sqrt(static_cast<double>(g.n()))));

    std::vector<std::pair<int, int>> path_edges;
    for (int i = 0; i < k; ++i) path_edges.emplace_back(base[i], base[i + 1]);
    Graph gp = g.without_edges(path_edges);

    // d_G'(v_a, x) for every path position a
    std::vector<std::vector<Hops>> from(k + 1);
    for (int a = 0; a <= k; ++a) from[a] = bfs(gp, base[a]);

    std::vector<Hops> naive = naive_replacement_paths(g, s, t);

    std::vector<int> long_triples;
    for (int i = 0; i < k; ++i) {
        if (naive[i] == kInfHops) continue;  // no replacement at all: excluded
        bool short_optimum = false;
        for (int a = 0; a <= i && !short_optimum; ++a) {
            for (int b = i + 1; b <= k; ++b) {
                Hops d = from[a][base[b]];
                if (d > sq) continue;
                if (a + d + (k - b) == naive[i]) {
                    short_optimum = true;
                    break;
                }
            }
        }
        if (!short_optimum) long_triples.push_back(i);
    }
    return long_triples;
}

}  // namespace ftsp
