#include "ftsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftsp {

Graph::Graph(int n, std::vector<Edge> edges, bool unit_weighted)
    : n_(n), unit_(unit_weighted) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (unit_) e.w = 1.0;
    }
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });
    // collapse parallel edges, smallest weight first after the sort above
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) continue;
        edges_.push_back(e);
    }

    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        out_off_[e.u + 1]++;
        in_off_[e.v + 1]++;
    }
    for (int i = 0; i < n_; ++i) {
        out_off_[i + 1] += out_off_[i];
        in_off_[i + 1] += in_off_[i];
    }
    out_adj_.resize(edges_.size());
    in_adj_.resize(edges_.size());
    std::vector<int> pos = out_off_;
    for (const auto& e : edges_) out_adj_[pos[e.u]++] = {e.v, e.w};
    pos = in_off_;
    // edges_ is (u,v)-sorted, so in-lists come out sorted by source as well
    for (const auto& e : edges_) in_adj_[pos[e.v]++] = {e.u, e.w};
}

bool Graph::has_edge(int u, int v) const {
    return edge_weight(u, v) != kInfWeight;
}

Weight Graph::edge_weight(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return kInfWeight;
    auto adj = out(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Adj& a, int t) { return a.to < t; });
    if (it != adj.end() && it->to == v) return it->w;
    return kInfWeight;
}

Graph Graph::without_edges(const std::vector<std::pair<int, int>>& removed) const {
    std::vector<std::pair<int, int>> gone = removed;
    std::sort(gone.begin(), gone.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (!std::binary_search(gone.begin(), gone.end(), std::make_pair(e.u, e.v)))
            kept.push_back(e);
    }
    return Graph(n_, std::move(kept), unit_);
}

bool Path::valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    if (hops != static_cast<Hops>(vertices.size()) - 1) return false;
    Weight sum = 0.0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        Weight w = g.edge_weight(vertices[i], vertices[i + 1]);
        if (w == kInfWeight) return false;
        sum += w;
    }
    return sum == weight;
}

Path make_path(const Graph& g, std::vector<int> vertices) {
    Path p;
    p.vertices = std::move(vertices);
    p.hops = p.vertices.empty() ? 0 : static_cast<Hops>(p.vertices.size()) - 1;
    p.weight = 0.0;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        Weight w = g.edge_weight(p.vertices[i], p.vertices[i + 1]);
        if (w == kInfWeight) throw std::invalid_argument("make_path: missing edge");
        p.weight += w;
    }
    return p;
}

void FaultSet::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool FaultSet::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool FaultSet::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool FaultSet::hits_path(const std::vector<int>& pv) const {
    for (int v : pv)
        if (has_vertex(v)) return true;
    for (size_t i = 0; i + 1 < pv.size(); ++i)
        if (has_edge(pv[i], pv[i + 1])) return true;
    return false;
}

}  // namespace ftsp
