#include "ftsp/shortest_paths.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>
#include <tuple>

#include "ftsp/errors.hpp"

namespace ftsp {

DijkstraResult dijkstra(const Graph& g, int source, OpCounters* ops) {
    const int n = g.n();
    DijkstraResult r;
    r.dist.assign(n, kInfWeight);
    r.parent.assign(n, -1);
    std::vector<char> settled(n, 0);

    using Item = std::pair<Weight, int>;  // (dist, label): label breaks ties
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    r.dist[source] = 0.0;
    pq.emplace(0.0, source);
    if (ops) ops->pq_push++;

    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (ops) ops->pq_pop++;
        if (settled[u] || d > r.dist[u]) continue;
        settled[u] = 1;
        for (const Adj& e : g.out(u)) {
            if (settled[e.to]) continue;
            if (ops) ops->relax++;
            Weight nd = d + e.w;
            if (nd < r.dist[e.to]) {
                r.dist[e.to] = nd;
                r.parent[e.to] = u;
                pq.emplace(nd, e.to);
                if (ops) ops->pq_push++;
            } else if (nd == r.dist[e.to] && u < r.parent[e.to]) {
                r.parent[e.to] = u;
            }
        }
    }
    return r;
}

std::vector<Hops> bfs(const Graph& g, int source, OpCounters* ops) {
    std::vector<Hops> dist(g.n(), kInfHops);
    std::deque<int> q;
    dist[source] = 0;
    q.push_back(source);
    if (ops) ops->pq_push++;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (ops) ops->pq_pop++;
        for (const Adj& e : g.out(u)) {
            if (ops) ops->relax++;
            if (dist[e.to] == kInfHops) {
                dist[e.to] = dist[u] + 1;
                q.push_back(e.to);
                if (ops) ops->pq_push++;
            }
        }
    }
    return dist;
}

std::vector<Hops> bfs_reverse(const Graph& g, int sink, OpCounters* ops) {
    std::vector<Hops> dist(g.n(), kInfHops);
    std::deque<int> q;
    dist[sink] = 0;
    q.push_back(sink);
    if (ops) ops->pq_push++;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (ops) ops->pq_pop++;
        for (const Adj& e : g.in(u)) {
            if (ops) ops->relax++;
            if (dist[e.to] == kInfHops) {
                dist[e.to] = dist[u] + 1;
                q.push_back(e.to);
                if (ops) ops->pq_push++;
            }
        }
    }
    return dist;
}

Weight hop_bounded_distance(const Graph& g, int s, int t, int L, const FaultSet& forbidden) {
    assert(L >= 0);
    if (forbidden.has_vertex(s) || forbidden.has_vertex(t)) return kInfWeight;
    const int n = g.n();
    std::vector<Weight> prev(n, kInfWeight), cur(n);
    prev[s] = 0.0;
    for (int round = 0; round < L; ++round) {
        cur = prev;  // implicit zero-cost self loop: staying put is allowed
        for (const Edge& e : g.edges()) {
            if (prev[e.u] == kInfWeight) continue;
            if (forbidden.has_vertex(e.u) || forbidden.has_vertex(e.v)) continue;
            if (forbidden.has_edge(e.u, e.v)) continue;
            Weight nd = prev[e.u] + e.w;
            if (nd < cur[e.v]) cur[e.v] = nd;
        }
        std::swap(prev, cur);
    }
    return prev[t];
}

ReweightResult johnson_reweight(const Graph& g) {
    const int n = g.n();
    // Super-source distances: start everything at 0, which is exactly
    // Bellman-Ford after relaxing the weight-0 source edges once.
    std::vector<double> phi(n, 0.0);
    bool changed = true;
    for (int round = 0; round < n && changed; ++round) {
        changed = false;
        for (const Edge& e : g.edges()) {
            if (phi[e.u] + e.w < phi[e.v]) {
                phi[e.v] = phi[e.u] + e.w;
                changed = true;
            }
        }
    }
    if (changed) {
        for (const Edge& e : g.edges())
            if (phi[e.u] + e.w < phi[e.v])
                throw NegativeCycleError("johnson_reweight: negative cycle detected");
    }

    std::vector<Edge> reduced = g.edges();
    for (auto& e : reduced) {
        e.w = e.w + phi[e.u] - phi[e.v];
        if (e.w < 0.0) e.w = 0.0;  // guard against -0.0 style round-off
    }
    ReweightResult out{Graph(n, std::move(reduced), g.unit_weighted()), PriceFunction{std::move(phi)}};
    return out;
}

}  // namespace ftsp
