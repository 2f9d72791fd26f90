#include "ftsp/random_graphs.hpp"

namespace ftsp {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // rejection sampling keeps the draw unbiased
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

long long Rng::next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double Rng::next_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Graph gnp(int n, double p, std::uint64_t seed, bool weighted, long long wmin, long long wmax) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.next_real() < p) {
                Weight w = weighted ? static_cast<Weight>(rng.next_int(wmin, wmax)) : 1.0;
                edges.push_back({u, v, w});
            }
        }
    }
    return Graph(n, std::move(edges), !weighted);
}

Graph path_plus(int n, int extra, std::uint64_t seed, bool weighted, long long wmin,
                long long wmax) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        Weight w = weighted ? static_cast<Weight>(rng.next_int(wmin, wmax)) : 1.0;
        edges.push_back({i, i + 1, w});
    }
    for (int i = 0; i < extra; ++i) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        Weight w = weighted ? static_cast<Weight>(rng.next_int(wmin, wmax)) : 1.0;
        edges.push_back({u, v, w});
    }
    return Graph(n, std::move(edges), !weighted);
}

Graph gnp_weighted(int n, double p, std::uint64_t seed, long long wmin, long long wmax) {
    return gnp(n, p, seed, true, wmin, wmax);
}

}  // namespace ftsp
