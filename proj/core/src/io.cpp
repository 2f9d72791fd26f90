#include "ftsp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ftsp/errors.hpp"

namespace ftsp {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return line;
    }
    throw ParseError("graph: unexpected end of file");
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::istringstream header(next_content_line(in));
    long long n = -1, m = -1;
    std::string directed, kind;
    if (!(header >> n >> m >> directed >> kind))
        throw ParseError("graph: bad header, expected `n m directed {unit|weighted}`");
    if (directed != "directed")
        throw ParseError("graph: expected token `directed`, got `" + directed + "`");
    bool unit;
    if (kind == "unit")
        unit = true;
    else if (kind == "weighted")
        unit = false;
    else
        throw ParseError("graph: weight kind must be `unit` or `weighted`, got `" + kind + "`");
    if (n < 0 || m < 0) throw ParseError("graph: negative n or m");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::istringstream ls(next_content_line(in));
        Edge e;
        if (!(ls >> e.u >> e.v)) throw ParseError("graph: bad edge line");
        if (!unit) {
            if (!(ls >> e.w)) throw ParseError("graph: weighted graph needs `u v w` lines");
        } else {
            e.w = 1.0;
        }
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ParseError("graph: edge endpoint out of range");
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges), unit);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

std::string format_weight(Weight w) {
    if (w == kInfWeight) return "inf";
    if (w == std::floor(w) && std::abs(w) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(w));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << " directed " << (g.unit_weighted() ? "unit" : "weighted")
        << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (!g.unit_weighted()) out << ' ' << format_weight(e.w);
        out << '\n';
    }
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_graph(out, g);
}

std::uint64_t graph_checksum(const Graph& g) {
    std::ostringstream canon;
    write_graph(canon, g);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace ftsp
