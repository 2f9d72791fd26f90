#include <benchmark/benchmark.h>

#include "ftsp/random_graphs.hpp"
#include "ftsp/replacement_paths.hpp"

using namespace ftsp;

static void BM_ReplacementPathsPathPlus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = path_plus(n, 3 * n, 42);
    OpCounters ops;
    for (auto _ : state) {
        RpResult res = replacement_paths(g, 0, n - 1, {}, &ops);
        benchmark::DoNotOptimize(res.lengths.data());
    }
    state.counters["pq_ops"] =
        static_cast<double>(ops.pq_push + ops.pq_pop) / static_cast<double>(state.iterations());
    state.counters["relax"] =
        static_cast<double>(ops.relax) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_ReplacementPathsPathPlus)->Arg(200)->Arg(400)->Arg(800)->Arg(1600)
    ->Unit(benchmark::kMillisecond);

static void BM_ReplacementPathsGnp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = gnp(n, 4.0 / n, 7);
    // pick a reachable pair deterministically
    int s = 0, t = -1;
    {
        RpOptions opts;
        for (int cand = n - 1; cand > 0; --cand) {
            try {
                replacement_paths(g, s, cand, opts);
                t = cand;
                break;
            } catch (...) {
            }
        }
    }
    if (t < 0) {
        state.SkipWithError("no reachable target");
        return;
    }
    for (auto _ : state) {
        RpResult res = replacement_paths(g, s, t);
        benchmark::DoNotOptimize(res.lengths.data());
    }
}
BENCHMARK(BM_ReplacementPathsGnp)->Arg(200)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_DetourSetTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = path_plus(n, 2 * n, 9);
    BasePath base = compute_base_path(g, 0, n - 1);
    for (auto _ : state) {
        DetourSet d = compute_detour_set_trees(g, base);
        benchmark::DoNotOptimize(d.entries.data());
    }
}
BENCHMARK(BM_DetourSetTrees)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_DetourSetDecremental(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = path_plus(n, 2 * n, 9);
    BasePath base = compute_base_path(g, 0, n - 1);
    for (auto _ : state) {
        DetourSet d = compute_detour_set_decremental(g, base);
        benchmark::DoNotOptimize(d.entries.data());
    }
}
BENCHMARK(BM_DetourSetDecremental)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
