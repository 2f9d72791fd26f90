#include "ftsp/ft_tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ftsp/errors.hpp"

namespace ftsp {

bool FtNode::path_contains(const FtElement& e) const {
    if (e.is_vertex) return std::binary_search(vertex_index.begin(), vertex_index.end(), e.u);
    return std::binary_search(edge_index.begin(), edge_index.end(), std::make_pair(e.u, e.v));
}

void FtNode::rebuild_index() {
    vertex_index = path.vertices;
    std::sort(vertex_index.begin(), vertex_index.end());
    edge_index.clear();
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
        edge_index.emplace_back(path.vertices[i], path.vertices[i + 1]);
    std::sort(edge_index.begin(), edge_index.end());
}

double ft_tree_node_estimate(int n, int L, int f) {
    return static_cast<double>(n) * n *
           std::pow(static_cast<double>(L) * (L + 1.0), static_cast<double>(f));
}

namespace {

// avoided sets stay tiny (size <= f), linear scans are fine
struct Avoided {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;

    bool has_vertex(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
    bool has_edge(int u, int v) const {
        return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
    }
    FaultSet as_fault_set() const {
        FaultSet f{vertices, edges};
        f.normalize();
        return f;
    }
};

class Builder {
public:
    Builder(const Graph& g, int L, int f) : g_(g), L_(L), f_(f), n_(g.n()) {}

    FtTrees run() {
        // level 0: d^0(s,s) = 0, everything else empty
        std::vector<std::unique_ptr<FtNode>> prev(static_cast<size_t>(n_) * n_);
        for (int s = 0; s < n_; ++s)
            for (int t = 0; t < n_; ++t) {
                Avoided none;
                prev[idx(s, t)] = build_level0_node(s, t, none, 0);
            }
        for (int level = 1; level <= L_; ++level) {
            prev_ = std::move(prev);
            prev = std::vector<std::unique_ptr<FtNode>>(static_cast<size_t>(n_) * n_);
            for (int s = 0; s < n_; ++s)
                for (int t = 0; t < n_; ++t) {
                    Avoided none;
                    prev[idx(s, t)] = build_node(s, t, none, 0);
                }
        }
        FtTrees out;
        out.n = n_;
        out.L = L_;
        out.f = f_;
        out.roots = std::move(prev);
        return out;
    }

private:
    size_t idx(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }

    std::unique_ptr<FtNode> build_level0_node(int s, int t, Avoided& avoided, int depth) {
        auto node = std::make_unique<FtNode>();
        if (s == t && !avoided.has_vertex(s)) {
            node->path.vertices = {s};
            node->path.hops = 0;
            node->path.weight = 0.0;
            node->dist = 0.0;
            node->rebuild_index();
            if (depth < f_) add_children(*node, s, t, avoided, depth, /*level0=*/true);
        }
        return node;
    }

    std::unique_ptr<FtNode> build_node(int s, int t, Avoided& avoided, int depth) {
        auto node = std::make_unique<FtNode>();
        if (avoided.has_vertex(s) || avoided.has_vertex(t)) return node;

        FaultSet faults = avoided.as_fault_set();
        // staying put keeps the level-(i-1) value at cost 0
        const FtNode* best_node = ft_query_node(prev_[idx(s, t)].get(), faults);
        Weight best = best_node ? best_node->dist : kInfWeight;
        int best_z = s;
        for (const Adj& e : g_.out(s)) {
            if (avoided.has_vertex(e.to) || avoided.has_edge(s, e.to)) continue;
            const FtNode* sub = ft_query_node(prev_[idx(e.to, t)].get(), faults);
            Weight cand = sub ? e.w + sub->dist : kInfWeight;
            if (cand < best || (cand == best && e.to < best_z)) {
                best = cand;
                best_z = e.to;
                best_node = sub;
            }
        }
        if (best == kInfWeight) return node;

        node->dist = best;
        if (best_z == s) {
            node->path = best_node->path;
        } else {
            node->path.vertices.reserve(best_node->path.vertices.size() + 1);
            node->path.vertices.push_back(s);
            node->path.vertices.insert(node->path.vertices.end(),
                                       best_node->path.vertices.begin(),
                                       best_node->path.vertices.end());
            node->path.hops = best_node->path.hops + 1;
            node->path.weight = best;
        }
        node->rebuild_index();
        if (depth < f_) add_children(*node, s, t, avoided, depth, /*level0=*/false);
        return node;
    }

    void add_children(FtNode& node, int s, int t, Avoided& avoided, int depth, bool level0) {
        std::vector<FtElement> elems;
        for (int v : node.vertex_index) elems.push_back({true, v, -1});
        for (auto [u, v] : node.edge_index) elems.push_back({false, u, v});
        // vertex_index/edge_index are sorted and de-duplicated by construction
        for (const FtElement& e : elems) {
            if (e.is_vertex)
                avoided.vertices.push_back(e.u);
            else
                avoided.edges.emplace_back(e.u, e.v);
            node.children.emplace_back(
                e, level0 ? build_level0_node(s, t, avoided, depth + 1)
                          : build_node(s, t, avoided, depth + 1));
            if (e.is_vertex)
                avoided.vertices.pop_back();
            else
                avoided.edges.pop_back();
        }
    }

    const Graph& g_;
    int L_, f_, n_;
    std::vector<std::unique_ptr<FtNode>> prev_;
};

}  // namespace

FtTrees build_ft_trees(const Graph& g, int L, int f, double node_budget) {
    if (L < 0 || f < 0) throw std::invalid_argument("build_ft_trees: L and f must be >= 0");
    for (const Edge& e : g.edges())
        if (e.w < 0) throw std::invalid_argument("build_ft_trees: negative weights (reweight first)");
    double estimate = ft_tree_node_estimate(g.n(), L, f);
    if (estimate > node_budget)
        throw CapacityError("build_ft_trees: estimated node count " + std::to_string(estimate) +
                            " exceeds budget " + std::to_string(node_budget));
    return Builder(g, L, f).run();
}

const FtNode* ft_query_node(const FtNode* root, const FaultSet& faults) {
    const FtNode* node = root;
    while (node && !node->empty()) {
        FtElement hit;
        bool found = false;
        for (int v : faults.vertices) {
            if (node->path_contains({true, v, -1})) {
                hit = {true, v, -1};
                found = true;
                break;
            }
        }
        if (!found) {
            for (auto [u, v] : faults.edges) {
                if (node->path_contains({false, u, v})) {
                    hit = {false, u, v};
                    found = true;
                    break;
                }
            }
        }
        if (!found) return node;
        const FtNode* next = nullptr;
        for (const auto& [elem, child] : node->children) {
            if (elem == hit) {
                next = child.get();
                break;
            }
        }
        assert(next != nullptr && "query descended past depth f");
        node = next;
    }
    return node;
}

Weight query_ft_tree(const FtNode* root, const FaultSet& faults) {
    const FtNode* node = ft_query_node(root, faults);
    return (node && !node->empty()) ? node->dist : kInfWeight;
}

namespace {

void collect_rec(const FtNode* node, Hops threshold, std::set<std::vector<int>>& seen,
                 PathFamily& family) {
    if (!node) return;
    if (!node->empty() && node->path.hops >= threshold) {
        if (seen.insert(node->path.vertices).second)
            family.members.push_back(node->path.vertices);
    }
    for (const auto& [elem, child] : node->children) collect_rec(child.get(), threshold, seen, family);
}

size_t count_rec(const FtNode* node) {
    if (!node) return 0;
    size_t c = 1;
    for (const auto& [elem, child] : node->children) c += count_rec(child.get());
    return c;
}

}  // namespace

PathFamily collect_long_stored_paths(const FtTrees& trees) {
    PathFamily family;
    Hops threshold = (trees.L + 1) / 2;  // ceil(L/2)
    family.min_size = static_cast<int>(threshold) + 1;
    std::set<std::vector<int>> seen;
    for (const auto& root : trees.roots) collect_rec(root.get(), threshold, seen, family);
    return family;
}

std::size_t total_node_count(const FtTrees& trees) {
    size_t c = 0;
    for (const auto& root : trees.roots) c += count_rec(root.get());
    return c;
}

}  // namespace ftsp
