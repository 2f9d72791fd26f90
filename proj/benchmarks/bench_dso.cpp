#include <benchmark/benchmark.h>

#include "ftsp/dso.hpp"
#include "ftsp/random_graphs.hpp"

using namespace ftsp;

static void BM_DsoBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = gnp_weighted(n, 4.0 / n, 11, 1, 20);
    for (auto _ : state) {
        Dso dso = build_dso(g, 3, 1);
        benchmark::DoNotOptimize(dso.pivots.pivots.data());
    }
}
BENCHMARK(BM_DsoBuild)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_DsoQuery(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = gnp_weighted(n, 4.0 / n, 11, 1, 20);
    Dso dso = build_dso(g, 3, 2);
    Rng rng(5);
    for (auto _ : state) {
        int s = static_cast<int>(rng.next_below(n));
        int t = static_cast<int>(rng.next_below(n));
        FaultSet f;
        f.vertices.push_back(static_cast<int>(rng.next_below(n)));
        f.normalize();
        benchmark::DoNotOptimize(query_dso(dso, s, t, f));
    }
}
BENCHMARK(BM_DsoQuery)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
