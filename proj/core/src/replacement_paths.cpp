#include "ftsp/replacement_paths.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ftsp/errors.hpp"
#include "ftsp/shortest_paths.hpp"

namespace ftsp {

namespace {

int ceil_sqrt(int n) {
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
}

}  // namespace

BasePath compute_base_path(const Graph& g, int s, int t, OpCounters* ops) {
    if (!g.unit_weighted())
        throw std::invalid_argument("compute_base_path: unit-weight digraph required");
    std::vector<Hops> dist = bfs(g, s, ops);
    if (dist[t] == kInfHops) throw NoPathError("replacement paths: t unreachable from s");

    std::vector<int> rev{t};
    int cur = t;
    while (cur != s) {
        int best = -1;
        for (const Adj& e : g.in(cur)) {
            if (dist[e.to] + 1 == dist[cur]) {
                best = e.to;  // smallest tight predecessor label
                break;
            }
        }
        cur = best;
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());

    BasePath base;
    base.path = make_path(g, std::move(rev));
    base.position.assign(g.n(), -1);
    for (int i = 0; i < static_cast<int>(base.path.vertices.size()); ++i)
        base.position[base.path.vertices[i]] = i;
    return base;
}

Graph strip_base_path(const Graph& g, const BasePath& base) {
    std::vector<std::pair<int, int>> path_edges;
    for (int i = 0; i < base.k(); ++i)
        path_edges.emplace_back(base.vertex(i), base.vertex(i + 1));
    return g.without_edges(path_edges);
}

RdTable compute_rd_table(const Graph& g_prime, const BasePath& base, int n,
                         OpCounters* ops) {
    const int k = base.k();
    const int sq = ceil_sqrt(n);
    RdTable table;
    table.sqrt_n = sq;
    table.rd.assign(k + 1, std::vector<Hops>(sq + 1, kInfHops));
    for (int i = 0; i <= k; ++i) table.rd[i][0] = 0;
    if (k == 0) return table;

    const int r = g_prime.n();  // auxiliary source label
    for (int phase = 0; phase < 2 * sq && phase <= k; ++phase) {
        // G^A: G' plus edges (r, v_{phase + 2q*sq}) of weight q*sq
        std::vector<Edge> edges = g_prime.edges();
        for (int q = 0; phase + 2 * q * sq <= k; ++q)
            edges.push_back({r, base.vertex(phase + 2 * q * sq),
                             static_cast<Weight>(q) * static_cast<Weight>(sq)});
        Graph aux(r + 1, std::move(edges), false);
        DijkstraResult res = dijkstra(aux, r, ops);

        for (int q = 0; phase + 2 * q * sq <= k; ++q) {
            int i = phase + 2 * q * sq;
            Weight offset = static_cast<Weight>(q) * static_cast<Weight>(sq);
            for (int j = 1; j <= sq && i + j <= k; ++j) {
                Weight d = res.dist[base.vertex(i + j)];
                // threshold test: below it the shortest path in G^A must start
                // with the edge (r, v_i)
                if (d <= offset + static_cast<Weight>(sq))
                    table.rd[i][j] = static_cast<Hops>(d - offset);
            }
        }
    }
    return table;
}

std::vector<Hops> short_detour_lengths(const BasePath& base, const RdTable& rd,
                                       std::vector<ShortWin>* wins, OpCounters* ops) {
    const int k = base.k();
    const int sq = rd.sqrt_n;
    std::vector<Hops> out(std::max(k, 0), kInfHops);
    if (wins) wins->assign(std::max(k, 0), ShortWin{-1, -1});

    // live pairs (a, b) with a <= i < b <= a + sq, keyed by a + rd[a][b-a] + (k-b)
    std::set<std::tuple<Hops, int, int>> window;
    for (int i = 0; i < k; ++i) {
        for (int b = i + 1; b <= std::min(i + sq, k); ++b) {
            Hops d = rd.at(i, b - i);
            if (d == kInfHops) continue;
            window.insert({static_cast<Hops>(i) + d + (k - b), i, b});
            if (ops) ops->pq_push++;
        }
        for (int a = std::max(0, i - sq); a < i; ++a) {
            Hops d = (i - a <= sq) ? rd.at(a, i - a) : kInfHops;
            if (d == kInfHops) continue;
            window.erase({static_cast<Hops>(a) + d + (k - i), a, i});
            if (ops) ops->pq_pop++;
        }
        if (!window.empty()) {
            auto [key, a, b] = *window.begin();
            out[i] = key;
            if (wins) (*wins)[i] = ShortWin{a, b};
        }
    }
    return out;
}

PivotSet select_long_pivots(const DetourSet& d, int n) {
    if (d.entries.empty()) return {};
    PathFamily family;
    family.min_size = ceil_sqrt(n) + 1;
    for (const auto& e : d.entries) family.members.push_back(e.detour.vertices);
    return greedy_pivot_selection(family, n);
}

std::vector<Hops> long_detour_lengths(const Graph& g_prime, const BasePath& base,
                                      const PivotSet& pivots, std::vector<LongWin>* wins,
                                      OpCounters* ops) {
    const int k = base.k();
    std::vector<Hops> out(std::max(k, 0), kInfHops);
    if (wins) wins->assign(std::max(k, 0), LongWin{});
    if (k == 0) return out;

    for (int r : pivots.pivots) {
        std::vector<Hops> to_r = bfs_reverse(g_prime, r, ops);   // d_G'(v, r)
        std::vector<Hops> from_r = bfs(g_prime, r, ops);         // d_G'(r, v)

        // Q_in over indices j <= i keyed j + d_G'(v_j, r);
        // Q_out over indices j > i keyed d_G'(r, v_j) + (k - j)
        std::set<std::pair<Hops, int>> q_in, q_out;
        auto in_key = [&](int j) -> Hops {
            Hops d = to_r[base.vertex(j)];
            return d == kInfHops ? kInfHops : static_cast<Hops>(j) + d;
        };
        auto out_key = [&](int j) -> Hops {
            Hops d = from_r[base.vertex(j)];
            return d == kInfHops ? kInfHops : d + static_cast<Hops>(k - j);
        };
        if (in_key(0) != kInfHops) {
            q_in.insert({in_key(0), 0});
            if (ops) ops->pq_push++;
        }
        for (int j = 1; j <= k; ++j) {
            if (out_key(j) == kInfHops) continue;
            q_out.insert({out_key(j), j});
            if (ops) ops->pq_push++;
        }

        for (int i = 0; i < k; ++i) {
            if (i > 0) {
                // slide: index i crosses from the out side to the in side
                if (out_key(i) != kInfHops) {
                    q_out.erase({out_key(i), i});
                    if (ops) ops->pq_pop++;
                }
                if (in_key(i) != kInfHops) {
                    q_in.insert({in_key(i), i});
                    if (ops) ops->pq_push++;
                }
            }
            if (q_in.empty() || q_out.empty()) continue;
            auto [ki, ji] = *q_in.begin();
            auto [ko, jo] = *q_out.begin();
            Hops cand = ki + ko;
            if (cand < out[i]) {
                out[i] = cand;
                if (wins) (*wins)[i] = LongWin{r, ji, jo};
            }
        }
    }
    return out;
}

RpResult replacement_paths(const Graph& g, int s, int t, const RpOptions& opts,
                           OpCounters* ops) {
    RpResult res;
    res.base = compute_base_path(g, s, t, ops);
    const int k = res.base.k();
    res.lengths.assign(std::max(k, 0), kInfHops);
    res.short_wins.assign(std::max(k, 0), std::nullopt);
    res.long_wins.assign(std::max(k, 0), std::nullopt);
    if (k == 0) return res;

    Graph g_prime = strip_base_path(g, res.base);
    RdTable rd = compute_rd_table(g_prime, res.base, g.n(), ops);
    std::vector<ShortWin> swins;
    std::vector<Hops> short_len = short_detour_lengths(res.base, rd, &swins, ops);

    DetourSet detours = opts.detour_algo == DetourAlgo::kTrees
                            ? compute_detour_set_trees(g, res.base, ops)
                            : compute_detour_set_decremental(g, res.base, nullptr, ops);
    PivotSet pivots = select_long_pivots(detours, g.n());
    std::vector<LongWin> lwins;
    std::vector<Hops> long_len = long_detour_lengths(g_prime, res.base, pivots, &lwins, ops);

    for (int i = 0; i < k; ++i) {
        // ties go to the short-detour candidate
        if (long_len[i] < short_len[i]) {
            res.lengths[i] = long_len[i];
            res.long_wins[i] = lwins[i];
        } else if (short_len[i] != kInfHops) {
            res.lengths[i] = short_len[i];
            res.short_wins[i] = swins[i];
        }
    }
    return res;
}

std::optional<Path> reconstruct_witness(const Graph& g, const RpResult& result, int i) {
    const BasePath& base = result.base;
    const int k = base.k();
    if (i < 0 || i >= k || result.lengths[i] == kInfHops) return std::nullopt;
    Graph g_prime = strip_base_path(g, base);

    auto trace = [&](const std::vector<Hops>& dist, int from, int to) {
        // walk a tight chain backwards, smallest predecessor label first
        std::vector<int> rev{to};
        int cur = to;
        while (cur != from) {
            for (const Adj& e : g_prime.in(cur)) {
                if (dist[e.to] + 1 == dist[cur]) {
                    cur = e.to;
                    break;
                }
            }
            rev.push_back(cur);
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    };

    std::vector<int> verts;
    if (result.short_wins[i]) {
        auto [a, b] = *result.short_wins[i];
        std::vector<Hops> dist = bfs(g_prime, base.vertex(a));
        std::vector<int> detour = trace(dist, base.vertex(a), base.vertex(b));
        verts.insert(verts.end(), base.path.vertices.begin(), base.path.vertices.begin() + a);
        verts.insert(verts.end(), detour.begin(), detour.end());
        verts.insert(verts.end(), base.path.vertices.begin() + b + 1, base.path.vertices.end());
    } else {
        auto [r, j_in, j_out] = *result.long_wins[i];
        std::vector<Hops> dist_to = bfs(g_prime, base.vertex(j_in));
        std::vector<int> first_leg = trace(dist_to, base.vertex(j_in), r);
        std::vector<Hops> dist_from = bfs(g_prime, r);
        std::vector<int> second_leg = trace(dist_from, r, base.vertex(j_out));
        verts.insert(verts.end(), base.path.vertices.begin(), base.path.vertices.begin() + j_in);
        verts.insert(verts.end(), first_leg.begin(), first_leg.end());
        verts.insert(verts.end(), second_leg.begin() + 1, second_leg.end());
        verts.insert(verts.end(), base.path.vertices.begin() + j_out + 1, base.path.vertices.end());
    }
    return make_path(g, std::move(verts));
}

Hops second_shortest_path(const Graph& g, int s, int t, const RpOptions& opts) {
    RpResult res = replacement_paths(g, s, t, opts);
    Hops best = kInfHops;
    for (Hops len : res.lengths) best = std::min(best, len);
    return best;
}

}  // namespace ftsp
