#pragma once

#include <vector>

#include "ftsp/graph.hpp"
#include "ftsp/op_counters.hpp"

namespace ftsp {

struct DijkstraResult {
    std::vector<Weight> dist;   // kInfWeight when unreachable
    std::vector<int> parent;    // -1 for source/unreachable
};

// Dijkstra with the deterministic tie-break contract: the extraction order
// breaks equal keys by smaller vertex label, and among equal-weight
// relaxations of an unsettled vertex the smaller-labeled parent wins.
// Requires non-negative weights.
DijkstraResult dijkstra(const Graph& g, int source, OpCounters* ops = nullptr);

// Unweighted hop distances; kInfHops when unreachable.
std::vector<Hops> bfs(const Graph& g, int source, OpCounters* ops = nullptr);

// Same as bfs but in the reverse graph: dist[v] = hops from v to sink.
std::vector<Hops> bfs_reverse(const Graph& g, int sink, OpCounters* ops = nullptr);

// d^L(s,t,F): weight of the shortest s-to-t path with at most L edges in
// G \ F, via L rounds of edge relaxation. d^0(s,s,F) = 0 for s not failed.
// Serves as the independent oracle for the fault-tolerant trees.
Weight hop_bounded_distance(const Graph& g, int s, int t, int L,
                            const FaultSet& forbidden = {});

struct ReweightResult {
    Graph graph;          // same structure, non-negative reduced weights
    PriceFunction price;  // d = d_phi - phi(s) + phi(t) recovers originals
};

// Bellman-Ford from a super source connected to every vertex with weight 0;
// throws NegativeCycleError when a negative cycle exists.
ReweightResult johnson_reweight(const Graph& g);

}  // namespace ftsp
