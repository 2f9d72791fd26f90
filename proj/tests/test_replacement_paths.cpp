#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "ftsp/errors.hpp"
#include "ftsp/oracle.hpp"
#include "ftsp/random_graphs.hpp"
#include "ftsp/replacement_paths.hpp"
#include "ftsp/shortest_paths.hpp"
#include "test_util.hpp"

using namespace ftsp;
namespace tu = ftsp::testutil;

namespace {

int ceil_sqrt(int n) { return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))); }

// G' restricted to detour parts: in-edges of base-path vertices removed, so
// a path starts on the base path and never returns to it
Graph detour_part_graph(const Graph& g, const BasePath& base) {
    Graph gp = strip_base_path(g, base);
    std::vector<Edge> kept;
    for (const Edge& e : gp.edges())
        if (base.position[e.v] < 0) kept.push_back(e);
    return Graph(gp.n(), std::move(kept), gp.unit_weighted());
}

// definitional (x, rho) set: per off-path x, the first index whose
// detour-part ball of radius sqrt(n) covers x, kept iff that distance is
// exactly sqrt(n); from all-pairs BFS in the restricted G'
std::map<int, int> definitional_detours(const Graph& g, const BasePath& base) {
    Graph gp = detour_part_graph(g, base);
    const int sq = ceil_sqrt(g.n());
    std::vector<std::vector<Hops>> from(base.k() + 1);
    for (int i = 0; i <= base.k(); ++i) from[i] = bfs(gp, base.vertex(i));
    std::map<int, int> out;
    for (int x = 0; x < g.n(); ++x) {
        if (base.position[x] >= 0) continue;
        int min_under = -1;
        for (int i = 0; i <= base.k(); ++i)
            if (from[i][x] <= sq) {
                min_under = i;
                break;
            }
        if (min_under >= 0 && from[min_under][x] == sq) out[x] = min_under;
    }
    return out;
}

std::map<int, int> as_pairs(const DetourSet& d) {
    std::map<int, int> out;
    for (const auto& e : d.entries) out[e.x] = e.rho;
    return out;
}

void check_detour_invariants(const Graph& g, const BasePath& base, const DetourSet& d) {
    Graph gp = strip_base_path(g, base);
    const int sq = ceil_sqrt(g.n());
    CHECK(d.entries.size() <= static_cast<size_t>(g.n()));
    for (const auto& e : d.entries) {
        CHECK(e.detour.hops == static_cast<Hops>(sq));
        CHECK(e.detour.vertices.front() == base.vertex(e.rho));
        CHECK(e.detour.vertices.back() == e.x);
        CHECK(e.detour.valid_in(g));
        // every detour edge lives in G'
        for (size_t i = 0; i + 1 < e.detour.vertices.size(); ++i)
            CHECK(gp.has_edge(e.detour.vertices[i], e.detour.vertices[i + 1]));
        // internally disjoint from the base path except the first vertex
        for (size_t i = 1; i + 1 < e.detour.vertices.size(); ++i)
            CHECK(base.position[e.detour.vertices[i]] == -1);
    }
}

}  // namespace

TEST_CASE("base path on a chain") {
    Graph g(3, {{0, 1}, {1, 2}}, true);
    BasePath b = compute_base_path(g, 0, 2);
    CHECK(b.path.vertices == std::vector<int>{0, 1, 2});
    CHECK(b.position[1] == 1);
    CHECK(b.position[2] == 2);
}

TEST_CASE("base path prefers the smaller-label branch") {
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, true);
    BasePath b = compute_base_path(g, 0, 3);
    CHECK(b.path.vertices == std::vector<int>{0, 1, 3});
}

TEST_CASE("base path hop count equals bfs distance") {
    Graph g = gnp(30, 0.15, 11);
    auto dist = bfs(g, 0);
    for (int t = 1; t < g.n(); ++t) {
        if (dist[t] == kInfHops) {
            CHECK_THROWS_AS(compute_base_path(g, 0, t), NoPathError);
        } else {
            BasePath b = compute_base_path(g, 0, t);
            CHECK(b.path.hops == dist[t]);
        }
    }
}

TEST_CASE("rd table with no off-path edges") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, true);
    BasePath b = compute_base_path(g, 0, 3);
    Graph gp = strip_base_path(g, b);
    RdTable rd = compute_rd_table(gp, b, g.n());
    for (int i = 0; i <= b.k(); ++i) {
        CHECK(rd.at(i, 0) == 0);
        for (int j = 1; j <= rd.sqrt_n; ++j) CHECK(rd.at(i, j) == kInfHops);
    }
}

TEST_CASE("rd table on the 4-vertex example") {
    Graph g = tu::four_vertex_example();
    BasePath b = compute_base_path(g, 0, 2);
    Graph gp = strip_base_path(g, b);
    RdTable rd = compute_rd_table(gp, b, g.n());
    CHECK(rd.sqrt_n == 2);
    CHECK(rd.at(0, 2) == 2);
    CHECK(rd.at(0, 1) == kInfHops);
    CHECK(rd.at(1, 1) == kInfHops);
}

TEST_CASE("rd table matches per-pair BFS in G'") {
    for (std::uint64_t seed : {3ULL, 8ULL, 21ULL}) {
        Graph g = gnp(40, 0.2, seed);
        int t = 39;
        BasePath b;
        try {
            b = compute_base_path(g, 0, t);
        } catch (const NoPathError&) {
            continue;
        }
        Graph gp = strip_base_path(g, b);
        RdTable rd = compute_rd_table(gp, b, g.n());
        const int sq = rd.sqrt_n;
        for (int i = 0; i <= b.k(); ++i) {
            auto dist = bfs(gp, b.vertex(i));
            for (int j = 0; j <= sq && i + j <= b.k(); ++j) {
                Hops truth = dist[b.vertex(i + j)];
                if (truth <= sq)
                    CHECK(rd.at(i, j) == truth);
                else
                    CHECK(rd.at(i, j) == kInfHops);
            }
        }
    }
}

TEST_CASE("short detours: all-infinite table yields all-infinite lengths") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, true);
    BasePath b = compute_base_path(g, 0, 3);
    RdTable rd = compute_rd_table(strip_base_path(g, b), b, g.n());
    auto lens = short_detour_lengths(b, rd);
    for (Hops h : lens) CHECK(h == kInfHops);
}

TEST_CASE("short detours on the 4-vertex example") {
    Graph g = tu::four_vertex_example();
    BasePath b = compute_base_path(g, 0, 2);
    RdTable rd = compute_rd_table(strip_base_path(g, b), b, g.n());
    CHECK(short_detour_lengths(b, rd) == std::vector<Hops>{2, 2});
}

TEST_CASE("short detours equal the definitional window minimum") {
    for (std::uint64_t seed : {5ULL, 13ULL, 29ULL}) {
        Graph g = gnp(40, 0.2, seed + 1000);
        BasePath b;
        try {
            b = compute_base_path(g, 0, 39);
        } catch (const NoPathError&) {
            continue;
        }
        Graph gp = strip_base_path(g, b);
        RdTable rd = compute_rd_table(gp, b, g.n());
        auto lens = short_detour_lengths(b, rd);
        const int sq = rd.sqrt_n;
        const int k = b.k();
        std::vector<std::vector<Hops>> from(k + 1);
        for (int i = 0; i <= k; ++i) from[i] = bfs(gp, b.vertex(i));
        for (int i = 0; i < k; ++i) {
            Hops expect = kInfHops;
            for (int a = 0; a <= i; ++a)
                for (int bb = i + 1; bb <= k; ++bb) {
                    Hops d = from[a][b.vertex(bb)];
                    if (d <= sq) expect = std::min(expect, static_cast<Hops>(a) + d + (k - bb));
                }
            CHECK(lens[i] == expect);
        }
    }
}

TEST_CASE("detour sets are empty without off-path edges") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, true);
    BasePath b = compute_base_path(g, 0, 3);
    CHECK(compute_detour_set_trees(g, b).entries.empty());
    CHECK(compute_detour_set_decremental(g, b).entries.empty());
}

TEST_CASE("detour sets are empty on the 4-vertex example") {
    Graph g = tu::four_vertex_example();
    BasePath b = compute_base_path(g, 0, 2);
    CHECK(compute_detour_set_trees(g, b).entries.empty());
    CHECK(compute_detour_set_decremental(g, b).entries.empty());
}

TEST_CASE("tree scan candidates violating rho-minimality are filtered") {
    // x=3 is reachable in sqrt(6)=3 hops from v_2 but in 1 hop from v_0,
    // so it fails the definition even though tree z=2 reports it.
    Graph g(6, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {4, 5}, {5, 3}}, true);
    BasePath b = compute_base_path(g, 0, 2);
    CHECK(compute_detour_set_trees(g, b).entries.empty());
    CHECK(compute_detour_set_decremental(g, b).entries.empty());
}

TEST_CASE("constructed long bypass yields one detour entry") {
    Graph g(10,
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 1},
             {0, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}},
            true);
    BasePath b = compute_base_path(g, 0, 4);
    DetourSet d = compute_detour_set_trees(g, b);
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries[0].x == 9);
    CHECK(d.entries[0].rho == 0);
    CHECK(d.entries[0].detour.vertices == std::vector<int>{0, 6, 7, 8, 9});
    check_detour_invariants(g, b, d);

    DetourSet d2 = compute_detour_set_decremental(g, b);
    CHECK(as_pairs(d) == as_pairs(d2));
    check_detour_invariants(g, b, d2);
}

TEST_CASE("detour sets match the definitional construction on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = gnp(50, 0.1, seed * 7);
        BasePath b;
        try {
            b = compute_base_path(g, 0, 49);
        } catch (const NoPathError&) {
            continue;
        }
        DetourSet d = compute_detour_set_trees(g, b);
        CHECK(as_pairs(d) == definitional_detours(g, b));
        check_detour_invariants(g, b, d);
    }
}

TEST_CASE("both detour algorithms agree on random graphs") {
    int compared = 0;
    for (std::uint64_t seed = 1; compared < 100; ++seed) {
        int n = 10 + static_cast<int>(seed % 51);
        Graph g = gnp(n, 2.5 / n, seed * 131 + 17);
        BasePath b;
        try {
            b = compute_base_path(g, 0, n - 1);
        } catch (const NoPathError&) {
            continue;
        }
        compared++;
        std::vector<int> memberships;
        DetourSet trees = compute_detour_set_trees(g, b);
        DetourSet decr = compute_detour_set_decremental(g, b, &memberships);
        CHECK(as_pairs(trees) == as_pairs(decr));
        check_detour_invariants(g, b, decr);
        // decremental work bound: nobody is rebuilt more than sqrt(n)+1 times
        const int sq = ceil_sqrt(n);
        for (int v = 0; v < n; ++v) CHECK(memberships[v] <= sq + 1);
    }
}

TEST_CASE("pivot selection over detour sets") {
    CHECK(select_long_pivots(DetourSet{}, 10).pivots.empty());

    Graph g(10,
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 1},
             {0, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}},
            true);
    BasePath b = compute_base_path(g, 0, 4);
    DetourSet d = compute_detour_set_trees(g, b);
    PivotSet r = select_long_pivots(d, g.n());
    REQUIRE(r.pivots.size() == 1);
    std::vector<int>& dv = d.entries[0].detour.vertices;
    CHECK(std::find(dv.begin(), dv.end(), r.pivots[0]) != dv.end());
}

TEST_CASE("pivots hit every detour on sparse random graphs") {
    for (std::uint64_t seed = 2; seed <= 10; ++seed) {
        Graph g = gnp(50, 0.1, seed * 991);
        BasePath b;
        try {
            b = compute_base_path(g, 0, 49);
        } catch (const NoPathError&) {
            continue;
        }
        DetourSet d = compute_detour_set_trees(g, b);
        PivotSet r = select_long_pivots(d, g.n());
        PathFamily fam;
        fam.min_size = ceil_sqrt(g.n()) + 1;
        for (const auto& e : d.entries) fam.members.push_back(e.detour.vertices);
        CHECK(verify_hitting(fam, r));
    }
}

TEST_CASE("long detour lengths with no pivots are infinite") {
    Graph g = tu::four_vertex_example();
    BasePath b = compute_base_path(g, 0, 2);
    auto lens = long_detour_lengths(strip_base_path(g, b), b, PivotSet{});
    CHECK(lens == std::vector<Hops>{kInfHops, kInfHops});
}

TEST_CASE("long detour lengths through pivot 3 on the 4-vertex example") {
    Graph g = tu::four_vertex_example();
    BasePath b = compute_base_path(g, 0, 2);
    auto lens = long_detour_lengths(strip_base_path(g, b), b, PivotSet{{3}});
    CHECK(lens == std::vector<Hops>{2, 2});
}

TEST_CASE("long detour lengths upper-bound the oracle, exactly on long triples") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = gnp(60, 0.1, seed * 53);
        BasePath b;
        try {
            b = compute_base_path(g, 0, 59);
        } catch (const NoPathError&) {
            continue;
        }
        DetourSet d = compute_detour_set_trees(g, b);
        PivotSet r = select_long_pivots(d, g.n());
        auto lens = long_detour_lengths(strip_base_path(g, b), b, r);
        auto naive = naive_replacement_paths(g, 0, 59);
        auto long_triples = enumerate_long_triples(g, 0, 59);
        for (int i = 0; i < b.k(); ++i) CHECK(lens[i] >= naive[i]);
        for (int i : long_triples) CHECK(lens[i] == naive[i]);
    }
}

TEST_CASE("replacement paths on a single edge") {
    Graph g(2, {{0, 1}}, true);
    RpResult res = replacement_paths(g, 0, 1);
    CHECK(res.lengths == std::vector<Hops>{kInfHops});
}

TEST_CASE("replacement paths on the 4-vertex example") {
    Graph g = tu::four_vertex_example();
    RpResult res = replacement_paths(g, 0, 2);
    CHECK(res.lengths == std::vector<Hops>{2, 2});
}

TEST_CASE("replacement paths match the naive oracle on random graphs") {
    int compared = 0;
    for (std::uint64_t seed = 1; compared < 40; ++seed) {
        int n = 8 + static_cast<int>(seed % 40);
        Graph g = gnp(n, 2.0 / n, seed * 37 + 3);
        RpResult res;
        try {
            res = replacement_paths(g, 0, n - 1);
        } catch (const NoPathError&) {
            continue;
        }
        compared++;
        auto naive = naive_replacement_paths(g, 0, n - 1);
        CHECK(res.lengths == naive);
        RpOptions decr{DetourAlgo::kDecremental};
        CHECK(replacement_paths(g, 0, n - 1, decr).lengths == naive);
    }
}

TEST_CASE("witnesses realize the reported lengths") {
    for (std::uint64_t seed : {4ULL, 9ULL, 15ULL, 33ULL}) {
        int n = 30;
        Graph g = gnp(n, 0.12, seed);
        RpResult res;
        try {
            res = replacement_paths(g, 0, n - 1);
        } catch (const NoPathError&) {
            continue;
        }
        for (int i = 0; i < res.base.k(); ++i) {
            auto w = reconstruct_witness(g, res, i);
            if (res.lengths[i] == kInfHops) {
                CHECK(!w.has_value());
                continue;
            }
            REQUIRE(w.has_value());
            CHECK(w->valid_in(g));
            CHECK(w->hops == res.lengths[i]);
            CHECK(w->vertices.front() == 0);
            CHECK(w->vertices.back() == n - 1);
            // avoids the failed edge
            int eu = res.base.vertex(i), ev = res.base.vertex(i + 1);
            for (size_t j = 0; j + 1 < w->vertices.size(); ++j)
                CHECK(!(w->vertices[j] == eu && w->vertices[j + 1] == ev));
        }
    }
}

TEST_CASE("coverage: every long triple is realized through a detour entry") {
    int with_long = 0;
    for (std::uint64_t seed = 1; seed <= 400 && with_long < 8; ++seed) {
        int n = 12 + static_cast<int>(seed % 29);
        Graph g = gnp(n, 1.8 / n, seed * 61 + 29);
        BasePath b;
        try {
            b = compute_base_path(g, 0, n - 1);
        } catch (const NoPathError&) {
            continue;
        }
        auto long_triples = enumerate_long_triples(g, 0, n - 1);
        if (long_triples.empty()) continue;
        with_long++;
        const int sq = ceil_sqrt(n);
        DetourSet d = compute_detour_set_trees(g, b);
        auto naive = naive_replacement_paths(g, 0, n - 1);
        for (int i : long_triples) {
            Graph ge = g.without_edges({{b.vertex(i), b.vertex(i + 1)}});
            bool realized = false;
            for (const auto& e : d.entries) {
                if (e.rho > i) continue;
                Hops rest = bfs(ge, e.x)[n - 1];
                if (rest == kInfHops) continue;
                if (static_cast<Hops>(e.rho) + sq + rest == naive[i]) {
                    realized = true;
                    break;
                }
            }
            CHECK(realized);
        }
    }
    CHECK(with_long > 0);
}

TEST_CASE("second shortest path") {
    Graph single(2, {{0, 1}}, true);
    CHECK(second_shortest_path(single, 0, 1) == kInfHops);

    CHECK(second_shortest_path(tu::four_vertex_example(), 0, 2) == 2);

    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}}, true);
    CHECK(second_shortest_path(tri, 0, 2) == 2);
}

TEST_CASE("replacement paths are deterministic") {
    Graph g = gnp(45, 0.1, 1234);
    RpResult a, b;
    try {
        a = replacement_paths(g, 0, 44);
        b = replacement_paths(g, 0, 44);
    } catch (const NoPathError&) {
        return;
    }
    CHECK(a.lengths == b.lengths);
    CHECK(a.base.path.vertices == b.base.path.vertices);
}
