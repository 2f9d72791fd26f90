#pragma once

#include <cstdint>
#include <random>

#include "ftsp/graph.hpp"

namespace ftsp {

// mt19937_64 raw outputs are pinned by the standard; bounded draws below avoid
// std::uniform_int_distribution so generated graphs are identical across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound);

    // uniform in [lo, hi] inclusive
    long long next_int(long long lo, long long hi);

    // uniform in [0, 1)
    double next_real();

private:
    std::mt19937_64 eng_;
};

// G(n, p): every ordered pair (u, v), u != v, is an edge with probability p.
Graph gnp(int n, double p, std::uint64_t seed, bool weighted = false,
          long long wmin = 1, long long wmax = 1);

// Hamiltonian-prefix path 0 -> 1 -> ... -> n-1 plus `extra` random edges;
// stresses replacement-path structure with s = 0, t = n-1.
Graph path_plus(int n, int extra, std::uint64_t seed, bool weighted = false,
                long long wmin = 1, long long wmax = 1);

// Random integer weights in [wmin, wmax] on a G(n, p) topology; may include
// negative weights when wmin < 0.
Graph gnp_weighted(int n, double p, std::uint64_t seed, long long wmin, long long wmax);

}  // namespace ftsp
