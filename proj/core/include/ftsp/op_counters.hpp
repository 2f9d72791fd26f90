#pragma once

#include <cstdint>

namespace ftsp {

// Operation counts are the benchmark currency; wall time is never asserted on.
struct OpCounters {
    std::uint64_t pq_push = 0;
    std::uint64_t pq_pop = 0;
    std::uint64_t relax = 0;

    std::uint64_t total() const { return pq_push + pq_pop + relax; }

    OpCounters& operator+=(const OpCounters& o) {
        pq_push += o.pq_push;
        pq_pop += o.pq_pop;
        relax += o.relax;
        return *this;
    }
};

}  // namespace ftsp
