#pragma once

#include <memory>
#include <vector>

#include "ftsp/graph.hpp"
#include "ftsp/hitting_set.hpp"

namespace ftsp {

// A failed element: a vertex, or a directed edge of a stored path.
struct FtElement {
    bool is_vertex = true;
    int u = -1;
    int v = -1;  // unused for vertices

    // canonical order: vertices before edges, each ascending
    bool operator<(const FtElement& o) const {
        if (is_vertex != o.is_vertex) return is_vertex;
        if (u != o.u) return u < o.u;
        return v < o.v;
    }
    bool operator==(const FtElement& o) const {
        return is_vertex == o.is_vertex && u == o.u && v == o.v;
    }
};

// Node of FT^{L,f}(s,t): the hop-bounded shortest s-t path avoiding the failed
// elements on the root-to-node trail, a membership index over the path's
// elements, and one child per path element while depth < f. An EMPTY node
// stores no path and has no children.
struct FtNode {
    Path path;               // empty vertex list == EMPTY
    Weight dist = kInfWeight;
    std::vector<int> vertex_index;                 // sorted path vertices
    std::vector<std::pair<int, int>> edge_index;   // sorted path edges
    std::vector<std::pair<FtElement, std::unique_ptr<FtNode>>> children;

    bool empty() const { return path.vertices.empty(); }
    bool path_contains(const FtElement& e) const;
    void rebuild_index();
};

struct FtTrees {
    int n = 0;
    int L = 0;
    int f = 0;
    std::vector<std::unique_ptr<FtNode>> roots;  // indexed s * n + t

    const FtNode* root(int s, int t) const { return roots[static_cast<size_t>(s) * n + t].get(); }
};

// Estimated total node count used by the capacity guard.
double ft_tree_node_estimate(int n, int L, int f);

// Level dynamic program: d^{i+1}(s,t,F) = min over allowed out-neighbors z
// (plus staying put at cost 0) of w(s,z) + d^i(z,t,F), ties by smallest z,
// where level-i values come from querying the level-i trees with the node's
// own avoided set. Paths are rebuilt from the traced first hops. Requires
// non-negative weights. Throws CapacityError past `node_budget` estimated
// nodes (default 1e8).
FtTrees build_ft_trees(const Graph& g, int L, int f, double node_budget = 1e8);

// Walks at most f levels, descending on the first element of F found on the
// current node's path, scanning F vertices-then-edges ascending. Returns the
// reached node (EMPTY nodes yield infinity through ft_query_dist).
const FtNode* ft_query_node(const FtNode* root, const FaultSet& faults);
Weight query_ft_tree(const FtNode* root, const FaultSet& faults);

// All node paths with at least ceil(L/2) edges, deduplicated by vertex
// sequence; the greedy pivot family of the oracle (min_size ceil(L/2)+1).
PathFamily collect_long_stored_paths(const FtTrees& trees);

std::size_t total_node_count(const FtTrees& trees);

}  // namespace ftsp
