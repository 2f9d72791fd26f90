#include "ftsp/dso.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ftsp/errors.hpp"
#include "ftsp/io.hpp"
#include "ftsp/shortest_paths.hpp"

namespace ftsp {

int hop_parameter_from_epsilon(int n, double epsilon, int f) {
    return static_cast<int>(std::ceil(std::pow(static_cast<double>(n), epsilon / f)));
}

Dso build_dso(const Graph& g, int L, int f, double node_budget) {
    Dso dso;
    dso.L = L;
    dso.f = f;
    dso.graph = g;

    bool has_negative = false;
    for (const Edge& e : g.edges())
        if (e.w < 0) has_negative = true;

    if (has_negative) {
        ReweightResult rw = johnson_reweight(g);
        dso.reweighted = true;
        dso.price = std::move(rw.price);
        dso.trees = build_ft_trees(rw.graph, L, f, node_budget);
    } else {
        dso.reweighted = false;
        dso.price.phi.assign(g.n(), 0.0);
        dso.trees = build_ft_trees(g, L, f, node_budget);
    }
    dso.pivots = greedy_pivot_selection(collect_long_stored_paths(dso.trees), g.n());
    return dso;
}

Weight query_dso(const Dso& dso, int s, int t, const FaultSet& faults) {
    if (faults.size() > dso.f)
        throw TooManyFailuresError("query_dso: " + std::to_string(faults.size()) +
                                   " failures but oracle supports " + std::to_string(dso.f));
    if (s == t) return faults.has_vertex(s) ? kInfWeight : 0.0;

    // dense graph H over B and the query endpoints
    std::vector<int> verts = dso.pivots.pivots;
    verts.push_back(s);
    verts.push_back(t);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int h = static_cast<int>(verts.size());

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(h) * h);
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
            if (a == b) continue;
            Weight w = query_ft_tree(dso.trees.root(verts[a], verts[b]), faults);
            if (w != kInfWeight) edges.push_back({a, b, w});
        }
    Graph dense(h, std::move(edges), false);

    int hs = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), s) - verts.begin());
    int ht = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), t) - verts.begin());
    Weight d = dijkstra(dense, hs).dist[ht];
    if (d == kInfWeight) return kInfWeight;
    if (dso.reweighted) d = d - dso.price.phi[s] + dso.price.phi[t];
    return d;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

void write_node(std::ostream& out, const FtNode* node) {
    if (!node || node->empty()) {
        out << "N empty\nC 0\n";
        return;
    }
    out << "N " << node->path.vertices.size();
    for (int v : node->path.vertices) out << ' ' << v;
    out << ' ' << format_weight(node->dist) << '\n';
    out << "C " << node->children.size() << '\n';
    for (const auto& [elem, child] : node->children) {
        if (elem.is_vertex)
            out << "E v " << elem.u << '\n';
        else
            out << "E e " << elem.u << ' ' << elem.v << '\n';
        write_node(out, child.get());
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string expect_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("dso: missing ") + what);
    return line;
}

std::unique_ptr<FtNode> read_node(std::istream& in) {
    auto node = std::make_unique<FtNode>();
    std::istringstream ns(expect_line(in, "node line"));
    std::string tag, arg;
    if (!(ns >> tag >> arg) || tag != "N") throw ParseError("dso: bad node line");
    if (arg != "empty") {
        size_t cnt = std::stoull(arg);
        node->path.vertices.resize(cnt);
        for (auto& v : node->path.vertices)
            if (!(ns >> v)) throw ParseError("dso: truncated node path");
        if (!(ns >> node->dist)) throw ParseError("dso: node missing dist");
        node->path.hops = static_cast<Hops>(cnt) - 1;
        node->path.weight = node->dist;
        node->rebuild_index();
    }
    std::istringstream cs(expect_line(in, "children line"));
    std::string ctag;
    size_t nchildren = 0;
    if (!(cs >> ctag >> nchildren) || ctag != "C") throw ParseError("dso: bad children line");
    for (size_t i = 0; i < nchildren; ++i) {
        std::istringstream es(expect_line(in, "element line"));
        std::string etag, kind;
        if (!(es >> etag >> kind) || etag != "E") throw ParseError("dso: bad element line");
        FtElement elem;
        if (kind == "v") {
            elem.is_vertex = true;
            if (!(es >> elem.u)) throw ParseError("dso: bad vertex element");
        } else if (kind == "e") {
            elem.is_vertex = false;
            if (!(es >> elem.u >> elem.v)) throw ParseError("dso: bad edge element");
        } else {
            throw ParseError("dso: element kind must be v or e");
        }
        node->children.emplace_back(elem, read_node(in));
    }
    return node;
}

}  // namespace

void write_dso(std::ostream& out, const Dso& dso) {
    std::ostringstream body;
    body << "ftsp-dso 1\n";
    body << "n " << dso.graph.n() << " L " << dso.L << " f " << dso.f << '\n';
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(graph_checksum(dso.graph)));
    body << "graph_checksum " << hex << '\n';
    body << "graph\n";
    write_graph(body, dso.graph);
    body << "price " << (dso.reweighted ? 1 : 0) << '\n';
    if (dso.reweighted) {
        for (int v = 0; v < dso.graph.n(); ++v) {
            if (v) body << ' ';
            body << format_weight(dso.price.phi[v]);
        }
        body << '\n';
    }
    body << "pivots " << dso.pivots.pivots.size() << '\n';
    for (size_t i = 0; i < dso.pivots.pivots.size(); ++i) {
        if (i) body << ' ';
        body << dso.pivots.pivots[i];
    }
    if (!dso.pivots.pivots.empty()) body << '\n';
    body << "trees\n";
    for (int s = 0; s < dso.graph.n(); ++s)
        for (int t = 0; t < dso.graph.n(); ++t) {
            body << "T " << s << ' ' << t << '\n';
            write_node(body, dso.trees.root(s, t));
        }
    body << "endtrees\n";

    std::string payload = body.str();
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(payload)));
    out << payload << "checksum " << hex << '\n';
}

void write_dso_file(const std::string& path, const Dso& dso) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_dso(out, dso);
}

Dso read_dso(std::istream& in) {
    // split payload from the trailing checksum line first
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t mark = all.rfind("checksum ");
    if (mark == std::string::npos || (mark != 0 && all[mark - 1] != '\n'))
        throw ParseError("dso: missing checksum line");
    std::string payload = all.substr(0, mark);
    std::istringstream cks(all.substr(mark));
    std::string tag, hexval;
    cks >> tag >> hexval;
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(payload)));
    if (hexval != hex) throw ChecksumError("dso: payload checksum mismatch");

    std::istringstream ps(payload);
    std::string line = expect_line(ps, "magic");
    if (line != "ftsp-dso 1") throw ParseError("dso: bad magic `" + line + "`");

    Dso dso;
    {
        std::istringstream hs(expect_line(ps, "header"));
        std::string nt, lt, ft;
        int n;
        if (!(hs >> nt >> n >> lt >> dso.L >> ft >> dso.f) || nt != "n" || lt != "L" || ft != "f")
            throw ParseError("dso: bad header line");
    }
    std::string stored_graph_hash;
    {
        std::istringstream gs(expect_line(ps, "graph_checksum"));
        std::string t;
        if (!(gs >> t >> stored_graph_hash) || t != "graph_checksum")
            throw ParseError("dso: bad graph_checksum line");
    }
    if (expect_line(ps, "graph marker") != "graph") throw ParseError("dso: missing graph section");
    dso.graph = read_graph(ps);
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(graph_checksum(dso.graph)));
    if (stored_graph_hash != hex) throw ChecksumError("dso: embedded graph hash mismatch");

    {
        std::istringstream prs(expect_line(ps, "price"));
        std::string t;
        int flag;
        if (!(prs >> t >> flag) || t != "price") throw ParseError("dso: bad price line");
        dso.reweighted = flag != 0;
    }
    dso.price.phi.assign(dso.graph.n(), 0.0);
    if (dso.reweighted) {
        std::istringstream vs(expect_line(ps, "price values"));
        for (int v = 0; v < dso.graph.n(); ++v)
            if (!(vs >> dso.price.phi[v])) throw ParseError("dso: truncated price values");
    }
    {
        std::istringstream pvs(expect_line(ps, "pivots"));
        std::string t;
        size_t cnt;
        if (!(pvs >> t >> cnt) || t != "pivots") throw ParseError("dso: bad pivots line");
        dso.pivots.pivots.resize(cnt);
        if (cnt > 0) {
            std::istringstream vals(expect_line(ps, "pivot values"));
            for (auto& p : dso.pivots.pivots)
                if (!(vals >> p)) throw ParseError("dso: truncated pivots");
        }
    }
    if (expect_line(ps, "trees marker") != "trees") throw ParseError("dso: missing trees section");
    dso.trees.n = dso.graph.n();
    dso.trees.L = dso.L;
    dso.trees.f = dso.f;
    dso.trees.roots.resize(static_cast<size_t>(dso.graph.n()) * dso.graph.n());
    for (int s = 0; s < dso.graph.n(); ++s)
        for (int t = 0; t < dso.graph.n(); ++t) {
            std::istringstream ts(expect_line(ps, "tree marker"));
            std::string tt;
            int rs, rt;
            if (!(ts >> tt >> rs >> rt) || tt != "T" || rs != s || rt != t)
                throw ParseError("dso: tree marker out of order");
            dso.trees.roots[static_cast<size_t>(s) * dso.graph.n() + t] = read_node(ps);
        }
    if (expect_line(ps, "endtrees") != "endtrees") throw ParseError("dso: missing endtrees");
    return dso;
}

Dso read_dso_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dso file: " + path);
    return read_dso(in);
}

}  // namespace ftsp
