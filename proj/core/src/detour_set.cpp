#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <tuple>

#include "ftsp/replacement_paths.hpp"
#include "ftsp/shortest_paths.hpp"

namespace ftsp {

namespace {

int ceil_sqrt(int n) {
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
}

// Detour-part distances: paths may start on the base path but never revisit
// it, so the working graph is G' with the in-edges of path vertices removed.
// Both detour-set algorithms compute distances of this kind; it is what the
// deletion sweep of the decremental variant inherently measures, and it is
// what makes every stored path internally disjoint from the base path.
Graph blocked_graph(const Graph& g_prime, const BasePath& base) {
    std::vector<Edge> kept;
    kept.reserve(g_prime.edges().size());
    for (const Edge& e : g_prime.edges())
        if (base.position[e.v] < 0) kept.push_back(e);
    return Graph(g_prime.n(), std::move(kept), g_prime.unit_weighted());
}

// G^A for phase z: the blocked graph plus a fresh source wired to
// v_{z + 2q*sq} at weight q*sq.
Graph build_aux_phase(const Graph& blocked, const BasePath& base, int sq, int z) {
    const int r = blocked.n();
    std::vector<Edge> edges = blocked.edges();
    for (int q = 0; z + 2 * q * sq <= base.k(); ++q)
        edges.push_back({r, base.vertex(z + 2 * q * sq),
                         static_cast<Weight>(q) * static_cast<Weight>(sq)});
    return Graph(r + 1, std::move(edges), false);
}

// reach[d][x] = smallest path index whose detour-part ball of radius d covers
// x; parent[d][x] = the in-neighbor that first realized it at layer d.
struct LayeredReach {
    std::vector<std::vector<int>> reach;   // (sq+1) x n, -1 for none
    std::vector<std::vector<int>> parent;  // -1 when carried from layer d-1
};

LayeredReach layered_reach(const Graph& blocked, const BasePath& base, int sq,
                           OpCounters* ops) {
    const int n = blocked.n();
    LayeredReach lr;
    lr.reach.assign(sq + 1, std::vector<int>(n, -1));
    lr.parent.assign(sq + 1, std::vector<int>(n, -1));
    for (int i = 0; i <= base.k(); ++i) lr.reach[0][base.vertex(i)] = i;
    for (int d = 1; d <= sq; ++d) {
        for (int x = 0; x < n; ++x) {
            int best = lr.reach[d - 1][x];
            int from = -1;
            for (const Adj& e : blocked.in(x)) {  // ascending source labels
                if (ops) ops->relax++;
                int cand = lr.reach[d - 1][e.to];
                if (cand >= 0 && (best < 0 || cand < best)) {
                    best = cand;
                    from = e.to;
                }
            }
            lr.reach[d][x] = best;
            lr.parent[d][x] = from;
        }
    }
    return lr;
}

}  // namespace

DetourSet compute_detour_set_trees(const Graph& g, const BasePath& base, OpCounters* ops) {
    const int n = g.n();
    const int sq = ceil_sqrt(n);
    const int k = base.k();
    Graph blocked = blocked_graph(strip_base_path(g, base), base);
    const int r = blocked.n();

    const int phases = std::min(2 * sq, k + 1);
    std::vector<DijkstraResult> trees(phases);
    for (int z = 0; z < phases; ++z) {
        Graph aux = build_aux_phase(blocked, base, sq, z);
        trees[z] = dijkstra(aux, r, ops);
    }

    // scan: per off-path vertex, the minimum index whose tree path realizes an
    // exactly-sq-edge detour part
    std::vector<int> best_index(n, -1), best_phase(n, -1);
    for (int z = 0; z < phases; ++z) {
        const auto& res = trees[z];
        // first base-path vertex on each tree path, memoized up the parents
        std::vector<int> first_hop(r + 1, -1);
        for (int x = 0; x < n; ++x) {
            if (res.dist[x] == kInfWeight || base.position[x] >= 0) continue;
            int cur = x;
            std::vector<int> chain;
            while (cur != r && first_hop[cur] == -1) {
                chain.push_back(cur);
                cur = res.parent[cur];
            }
            int fh = (cur == r) ? chain.back() : first_hop[cur];
            for (int c : chain) first_hop[c] = fh;

            int i = base.position[fh];
            int q = (i - z) / (2 * sq);
            Hops part = static_cast<Hops>(res.dist[x]) - static_cast<Hops>(q) * sq;
            if (part != static_cast<Hops>(sq)) continue;
            if (best_index[x] == -1 || i < best_index[x]) {
                best_index[x] = i;
                best_phase[x] = z;
            }
        }
    }

    // Exact membership: rho(x) is the earliest index reaching x within sq
    // detour-part hops, and x qualifies iff that index first appears at layer
    // sq exactly. The scan alone can miss or over-report when one tree masks
    // a source behind a cheaper one, so the layered table decides and the
    // scanned tree path is used whenever it realized the right index.
    LayeredReach lr = layered_reach(blocked, base, sq, ops);

    DetourSet out;
    for (int x = 0; x < n; ++x) {
        if (base.position[x] >= 0) continue;
        int rho = lr.reach[sq][x];
        if (rho < 0 || lr.reach[sq - 1][x] == rho) continue;

        std::vector<int> verts;
        if (best_index[x] == rho) {
            const auto& res = trees[best_phase[x]];
            int cur = x;
            for (int step = 0; step <= sq; ++step) {
                verts.push_back(cur);
                cur = res.parent[cur];
            }
        } else {
            int cur = x;
            for (int d = sq; d >= 1; --d) {
                verts.push_back(cur);
                cur = lr.parent[d][cur];
                assert(cur >= 0);
            }
            verts.push_back(cur);
        }
        std::reverse(verts.begin(), verts.end());
        assert(verts.front() == base.vertex(rho));
        out.entries.push_back({x, rho, make_path(g, std::move(verts))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decremental variant: a single trimmed shortest-path tree from s under
// lexicographic weights (non-path edges, path edges), maintained while the
// base path is deleted back to front. A vertex whose tree path dies is
// recomputed from boundary seeds; its integral distance must grow each time,
// so it is touched at most sq+1 times before it leaves the radius.
// ---------------------------------------------------------------------------

namespace {

struct LexDist {
    Hops a = kInfHops;  // non-path edges
    Hops b = 0;         // path edges; equals the prefix index on tree paths

    bool operator<(const LexDist& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool operator==(const LexDist& o) const { return a == o.a && b == o.b; }
    bool infinite() const { return a >= kInfHops; }
};

struct TrimmedTree {
    std::vector<LexDist> dist;
    std::vector<int> parent;
    std::vector<char> alive;
    std::vector<std::vector<int>> children;

    void attach(int v, int p) {
        parent[v] = p;
        if (p >= 0) children[p].push_back(v);
    }
    void detach(int v) {
        int p = parent[v];
        if (p >= 0) std::erase(children[p], v);
        parent[v] = -1;
    }
    std::vector<int> subtree(int root) const {
        std::vector<int> out;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (int c : children[v]) stack.push_back(c);
        }
        return out;
    }
};

}  // namespace

DetourSet compute_detour_set_decremental(const Graph& g, const BasePath& base,
                                         std::vector<int>* memberships, OpCounters* ops) {
    const int n = g.n();
    const int sq = ceil_sqrt(n);
    const int k = base.k();
    const int s = base.vertex(0);

    auto on_path_edge = [&](int u, int v) {
        return base.position[u] >= 0 && base.position[v] == base.position[u] + 1;
    };

    TrimmedTree tree;
    tree.dist.assign(n, LexDist{});
    tree.parent.assign(n, -1);
    tree.alive.assign(n, 0);
    tree.children.assign(n, {});
    std::vector<char> removed(n, 0), seen(n, 0), settled(n, 0);
    if (memberships) memberships->assign(n, 0);

    DetourSet out;
    auto emit = [&](int x) {
        if (seen[x] || tree.dist[x].a != static_cast<Hops>(sq)) return;
        seen[x] = 1;
        std::vector<int> rev;
        int cur = x;
        for (int step = 0; step <= sq; ++step) {
            rev.push_back(cur);
            cur = tree.parent[cur];
        }
        std::reverse(rev.begin(), rev.end());
        assert(base.position[rev.front()] == static_cast<int>(tree.dist[x].b));
        out.entries.push_back(
            {x, static_cast<int>(tree.dist[x].b), make_path(g, std::move(rev))});
    };

    // initial trimmed Dijkstra from s over the whole graph
    {
        using Item = std::tuple<Hops, Hops, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        tree.dist[s] = {0, 0};
        pq.emplace(0, 0, s);
        if (ops) ops->pq_push++;
        while (!pq.empty()) {
            auto [a, b, u] = pq.top();
            pq.pop();
            if (ops) ops->pq_pop++;
            if (settled[u] || !(LexDist{a, b} == tree.dist[u])) continue;
            settled[u] = 1;
            for (const Adj& e : g.out(u)) {
                if (settled[e.to]) continue;
                if (ops) ops->relax++;
                LexDist nd = on_path_edge(u, e.to) ? LexDist{a, b + 1} : LexDist{a + 1, b};
                if (nd.a > static_cast<Hops>(sq)) continue;  // trim radius
                if (nd < tree.dist[e.to]) {
                    tree.dist[e.to] = nd;
                    tree.parent[e.to] = u;
                    pq.emplace(nd.a, nd.b, e.to);
                    if (ops) ops->pq_push++;
                } else if (nd == tree.dist[e.to] && u < tree.parent[e.to]) {
                    tree.parent[e.to] = u;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (settled[v]) {
                tree.alive[v] = 1;
                if (tree.parent[v] >= 0) tree.children[tree.parent[v]].push_back(v);
            } else {
                tree.dist[v] = LexDist{};
            }
        }
        for (int v = 0; v < n; ++v)
            if (tree.alive[v]) emit(v);
    }

    // delete path vertices back to front, rebuilding only the orphaned subtree
    for (int i = k - 1; i >= 0; --i) {
        int gone = base.vertex(i + 1);
        assert(tree.alive[gone]);
        std::vector<int> targets = tree.subtree(gone);
        std::erase(targets, gone);
        std::sort(targets.begin(), targets.end());
        if (memberships)
            for (int v : targets) (*memberships)[v]++;

        removed[gone] = 1;
        tree.alive[gone] = 0;
        tree.detach(gone);
        tree.dist[gone] = LexDist{};
        tree.children[gone].clear();

        std::vector<char> in_sub(n, 0);
        for (int v : targets) in_sub[v] = 1;
        for (int v : targets) {
            tree.detach(v);
            tree.dist[v] = LexDist{};
            tree.alive[v] = 0;
        }

        // seed each orphan from its best live in-neighbor outside the subtree;
        // seeding from the live boundary doubles as the auxiliary shortcut edges
        using Item = std::tuple<Hops, Hops, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        std::vector<char> done(n, 0);
        for (int u : targets) {
            LexDist best;
            int bestp = -1;
            for (const Adj& e : g.in(u)) {
                int w = e.to;
                if (!tree.alive[w] || in_sub[w] || removed[w]) continue;
                if (ops) ops->relax++;
                LexDist cand{tree.dist[w].a + 1, tree.dist[w].b};  // orphans are off-path
                if (cand < best) {
                    best = cand;
                    bestp = w;
                }
            }
            if (!best.infinite() && best.a <= static_cast<Hops>(sq)) {
                tree.dist[u] = best;
                tree.parent[u] = bestp;
                pq.emplace(best.a, best.b, u);
                if (ops) ops->pq_push++;
            }
        }
        while (!pq.empty()) {
            auto [a, b, u] = pq.top();
            pq.pop();
            if (ops) ops->pq_pop++;
            if (done[u] || !(LexDist{a, b} == tree.dist[u])) continue;
            done[u] = 1;
            for (const Adj& e : g.out(u)) {
                if (!in_sub[e.to] || done[e.to]) continue;
                if (ops) ops->relax++;
                LexDist nd{a + 1, b};
                if (nd.a > static_cast<Hops>(sq)) continue;
                if (nd < tree.dist[e.to]) {
                    tree.dist[e.to] = nd;
                    tree.parent[e.to] = u;
                    pq.emplace(nd.a, nd.b, e.to);
                    if (ops) ops->pq_push++;
                } else if (nd == tree.dist[e.to] && u < tree.parent[e.to]) {
                    tree.parent[e.to] = u;
                }
            }
        }
        for (int u : targets) {
            if (tree.dist[u].infinite()) {
                tree.parent[u] = -1;
                continue;
            }
            tree.alive[u] = 1;
            if (tree.parent[u] >= 0) tree.children[tree.parent[u]].push_back(u);
            emit(u);
        }
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const DetourEntry& a, const DetourEntry& b) { return a.x < b.x; });
    return out;
}

}  // namespace ftsp
