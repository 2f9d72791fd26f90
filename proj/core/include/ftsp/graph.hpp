#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace ftsp {

using Weight = double;
inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::infinity();

// Hop counts use a saturating sentinel so sums of two infinities stay positive.
using Hops = std::int64_t;
inline constexpr Hops kInfHops = std::numeric_limits<Hops>::max() / 4;

struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 1.0;
};

struct Adj {
    int to = 0;      // target (out-adjacency) or source (in-adjacency)
    Weight w = 1.0;
};

// Immutable directed graph in compressed adjacency form.
// Vertex ids are dense integers in [0, n). Out-neighbors of each vertex are
// stored in strictly ascending target order; parallel edges are collapsed at
// construction keeping the smallest weight; self-loops are dropped.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, bool unit_weighted);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    bool unit_weighted() const { return unit_; }

    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Adj> out(int u) const {
        return {out_adj_.data() + out_off_[u], out_adj_.data() + out_off_[u + 1]};
    }
    std::span<const Adj> in(int v) const {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }

    bool has_edge(int u, int v) const;
    // Weight of (u,v), kInfWeight if absent.
    Weight edge_weight(int u, int v) const;

    // Copy with the given directed edges removed (used to build G').
    Graph without_edges(const std::vector<std::pair<int, int>>& removed) const;

private:
    int n_ = 0;
    bool unit_ = true;
    std::vector<Edge> edges_;          // canonical (u,v)-sorted
    std::vector<int> out_off_, in_off_;
    std::vector<Adj> out_adj_, in_adj_;
};

// Vertex sequence with cached hop count and weight; the universal currency
// between modules.
struct Path {
    std::vector<int> vertices;
    Hops hops = 0;
    Weight weight = 0.0;

    bool empty() const { return vertices.empty(); }
    // Recomputes hops/weight from the vertex list and checks every
    // consecutive pair is an edge of g.
    bool valid_in(const Graph& g) const;
};

Path make_path(const Graph& g, std::vector<int> vertices);

// Set of at most f failed edges and/or vertices, kept in canonical order
// (vertices ascending, then edges ascending); this is also the scan order of
// the fault-tolerant tree query.
struct FaultSet {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;

    void normalize();
    int size() const { return static_cast<int>(vertices.size() + edges.size()); }
    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    bool hits_path(const std::vector<int>& path_vertices) const;
};

// Per-vertex potentials phi with w(u,v) + phi(u) - phi(v) >= 0 on every edge.
struct PriceFunction {
    std::vector<double> phi;
};

}  // namespace ftsp
