#pragma once

#include <iosfwd>
#include <string>

#include "ftsp/ft_tree.hpp"
#include "ftsp/graph.hpp"
#include "ftsp/hitting_set.hpp"

namespace ftsp {

// f-sensitivity distance oracle: all-pairs fault-tolerant trees, the greedy
// pivot set B over long stored paths, and the price function when the input
// had negative weights (trees are built on the reduced graph).
struct Dso {
    int L = 0;
    int f = 0;
    Graph graph;  // original input
    bool reweighted = false;
    PriceFunction price;
    PivotSet pivots;
    FtTrees trees;
};

// Derives the hop parameter from an epsilon-style tradeoff: L = ceil(n^(eps/f)).
int hop_parameter_from_epsilon(int n, double epsilon, int f);

// Throws NegativeCycleError or CapacityError.
Dso build_dso(const Graph& g, int L, int f, double node_budget = 1e8);

// Builds the dense graph over pivots plus {s,t} with edge weights from tree
// queries, runs Dijkstra, and undoes the reweighting. Exact d_G(s,t,F).
// Throws TooManyFailuresError when |F| > f.
Weight query_dso(const Dso& dso, int s, int t, const FaultSet& faults);

// Versioned structured-text dump; self-describing header carries
// (n, L, f, input-graph checksum) and the payload ends with its own checksum.
void write_dso(std::ostream& out, const Dso& dso);
void write_dso_file(const std::string& path, const Dso& dso);
Dso read_dso(std::istream& in);             // throws ParseError / ChecksumError
Dso read_dso_file(const std::string& path);

}  // namespace ftsp
