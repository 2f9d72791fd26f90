#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ftsp/dso.hpp"
#include "ftsp/errors.hpp"
#include "ftsp/io.hpp"
#include "ftsp/oracle.hpp"
#include "ftsp/random_graphs.hpp"
#include "ftsp/replacement_paths.hpp"
#include "ftsp/shortest_paths.hpp"

namespace ftsp::cli {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string hops_str(Hops h) { return h >= kInfHops ? "inf" : std::to_string(h); }
std::string hops_json(Hops h) { return h >= kInfHops ? "null" : std::to_string(h); }

void require_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.n())
        throw ParseError(std::string(what) + " vertex " + std::to_string(v) +
                         " out of range [0, " + std::to_string(g.n()) + ")");
}

// failure spec grammar: `v:<id>` or `e:<u>-<v>`
FaultSet parse_failure_specs(const std::vector<std::string>& specs) {
    FaultSet f;
    for (const std::string& s : specs) {
        bool ok = false;
        if (s.size() > 2 && s[1] == ':') {
            std::istringstream body(s.substr(2));
            if (s[0] == 'v') {
                int v;
                char trail;
                if (body >> v && !(body >> trail)) {
                    f.vertices.push_back(v);
                    ok = true;
                }
            } else if (s[0] == 'e') {
                int u, v;
                char dash, trail;
                if (body >> u >> dash >> v && dash == '-' && !(body >> trail)) {
                    f.edges.emplace_back(u, v);
                    ok = true;
                }
            }
        }
        if (!ok)
            throw ParseError("bad failure spec `" + s + "` (expected v:<id> or e:<u>-<v>)");
    }
    f.normalize();
    return f;
}

int cmd_gen(int n, const std::string& model, double p, int extra, std::uint64_t seed,
            bool weighted, long long wmin, long long wmax, const std::string& out_file,
            std::ostream& out) {
    Graph g;
    if (model == "gnp")
        g = gnp(n, p, seed, weighted, wmin, wmax);
    else if (model == "path-plus")
        g = path_plus(n, extra, seed, weighted, wmin, wmax);
    else
        throw ParseError("unknown model `" + model + "` (expected gnp or path-plus)");
    write_graph_file(out_file, g);
    out << "gen n=" << g.n() << " m=" << g.m() << " model=" << model << " seed=" << seed
        << " out=" << out_file << '\n';
    return kExitOk;
}

int cmd_rp(const Graph& g, int s, int t, const std::string& dn_algo, bool json, bool witness,
           std::ostream& out) {
    if (!g.unit_weighted()) throw ParseError("rp: graph must be unit-weighted");
    RpOptions opts;
    opts.detour_algo = dn_algo == "decremental" ? DetourAlgo::kDecremental : DetourAlgo::kTrees;
    OpCounters ops;
    RpResult res = replacement_paths(g, s, t, opts, &ops);
    const int k = res.base.k();

    if (json) {
        out << "{\"record\":\"rp\",\"s\":" << s << ",\"t\":" << t << ",\"k\":" << k
            << ",\"algo\":\"" << dn_algo << "\",\"n\":" << g.n() << ",\"m\":" << g.m() << "}\n";
    } else {
        out << "rp s=" << s << " t=" << t << " k=" << k << " algo=" << dn_algo << " n=" << g.n()
            << " m=" << g.m() << '\n';
    }
    for (int i = 0; i < k; ++i) {
        int u = res.base.vertex(i), v = res.base.vertex(i + 1);
        std::string wit;
        if (witness && res.lengths[i] < kInfHops) {
            auto w = reconstruct_witness(g, res, i);
            std::ostringstream ws;
            for (size_t j = 0; j < w->vertices.size(); ++j) {
                if (j) ws << ',';
                ws << w->vertices[j];
            }
            wit = ws.str();
        }
        if (json) {
            out << "{\"record\":\"edge\",\"i\":" << i << ",\"u\":" << u << ",\"v\":" << v
                << ",\"len\":" << hops_json(res.lengths[i]);
            if (!wit.empty()) out << ",\"witness\":[" << wit << "]";
            out << "}\n";
        } else {
            out << "edge i=" << i << " u=" << u << " v=" << v << " len=" << hops_str(res.lengths[i]);
            if (!wit.empty()) out << " witness=" << wit;
            out << '\n';
        }
    }
    if (json) {
        out << "{\"record\":\"counters\",\"pq_push\":" << ops.pq_push
            << ",\"pq_pop\":" << ops.pq_pop << ",\"relax\":" << ops.relax << "}\n";
    } else {
        out << "counters pq_push=" << ops.pq_push << " pq_pop=" << ops.pq_pop
            << " relax=" << ops.relax << '\n';
    }
    return kExitOk;
}

int cmd_dso_build(const std::string& graph_file, int L, int f, const std::string& out_file,
                  double budget, std::ostream& out) {
    Graph g = read_graph_file(graph_file);
    Dso dso = build_dso(g, L, f, budget);
    write_dso_file(out_file, dso);
    out << "dso_build n=" << g.n() << " m=" << g.m() << " L=" << L << " f=" << f
        << " nodes=" << total_node_count(dso.trees) << " pivots=" << dso.pivots.pivots.size()
        << " out=" << out_file << '\n';
    return kExitOk;
}

int cmd_dso_query(const std::string& dso_file, int s, int t,
                  const std::vector<std::string>& fail_specs, std::ostream& out) {
    Dso dso = read_dso_file(dso_file);
    require_vertex(dso.graph, s, "source");
    require_vertex(dso.graph, t, "target");
    FaultSet faults = parse_failure_specs(fail_specs);
    Weight d = query_dso(dso, s, t, faults);
    out << "dso_query s=" << s << " t=" << t << " failures=" << faults.size()
        << " dist=" << format_weight(d) << '\n';
    return kExitOk;
}

int cmd_verify_rp(const Graph& g, int s, int t, bool inject_fault, std::ostream& out) {
    if (!g.unit_weighted()) throw ParseError("verify --mode rp: graph must be unit-weighted");
    std::vector<Hops> expected = naive_replacement_paths(g, s, t);
    const int k = static_cast<int>(expected.size());
    long long mismatches = 0;

    for (const char* algo : {"trees", "decremental"}) {
        RpOptions opts;
        opts.detour_algo =
            std::string(algo) == "trees" ? DetourAlgo::kTrees : DetourAlgo::kDecremental;
        RpResult res = replacement_paths(g, s, t, opts);
        for (int i = 0; i < k; ++i) {
            if (res.lengths[i] != expected[i]) {
                if (mismatches == 0)
                    out << "mismatch edge_index=" << i << " expected=" << hops_str(expected[i])
                        << " actual=" << hops_str(res.lengths[i]) << " algo=" << algo << '\n';
                mismatches++;
            }
        }
    }

    if (inject_fault && k >= 1) {
        // test hook: corrupt one RD entry and confirm the comparison trips
        BasePath base = compute_base_path(g, s, t);
        Graph g_prime = strip_base_path(g, base);
        RdTable rd = compute_rd_table(g_prime, base, g.n());
        rd.rd[k / 2][1] = 0;
        std::vector<Hops> short_len = short_detour_lengths(base, rd);
        DetourSet detours = compute_detour_set_trees(g, base);
        PivotSet pivots = select_long_pivots(detours, g.n());
        std::vector<Hops> long_len = long_detour_lengths(g_prime, base, pivots);
        for (int i = 0; i < k; ++i) {
            Hops got = std::min(short_len[i], long_len[i]);
            if (got != expected[i]) {
                if (mismatches == 0)
                    out << "mismatch edge_index=" << i << " expected=" << hops_str(expected[i])
                        << " actual=" << hops_str(got) << " algo=trees+injected-rd-fault\n";
                mismatches++;
            }
        }
    }

    out << "verify mode=rp s=" << s << " t=" << t << " edges=" << k
        << " mismatches=" << mismatches << '\n';
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_verify_dso(const Graph& g, int L, int f, int queries, std::uint64_t seed,
                   std::ostream& out) {
    Dso dso = build_dso(g, L, f);
    Rng rng(seed);
    long long mismatches = 0;
    for (int qi = 0; qi < queries; ++qi) {
        int s = static_cast<int>(rng.next_below(g.n()));
        int t = static_cast<int>(rng.next_below(g.n()));
        FaultSet faults;
        int nf = static_cast<int>(rng.next_below(f + 1));
        for (int j = 0; j < nf; ++j) {
            if (g.m() > 0 && rng.next_below(2) == 0) {
                const Edge& e = g.edges()[rng.next_below(g.m())];
                faults.edges.emplace_back(e.u, e.v);
            } else {
                faults.vertices.push_back(static_cast<int>(rng.next_below(g.n())));
            }
        }
        faults.normalize();
        Weight got = query_dso(dso, s, t, faults);
        Weight want = naive_dso_distance(g, s, t, faults);
        if (got != want) {
            if (mismatches == 0)
                out << "mismatch s=" << s << " t=" << t << " failures=" << faults.size()
                    << " expected=" << format_weight(want) << " actual=" << format_weight(got)
                    << '\n';
            mismatches++;
        }
    }
    out << "verify mode=dso L=" << L << " f=" << f << " queries=" << queries
        << " mismatches=" << mismatches << '\n';
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fault-tolerant shortest path toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random graph file");
    int gen_n = 10;
    std::string gen_model = "gnp";
    double gen_p = 0.1;
    int gen_extra = 0;
    std::uint64_t gen_seed = 1;
    bool gen_weighted = false;
    long long gen_wmin = 1, gen_wmax = 10;
    std::string gen_out;
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--model", gen_model, "gnp or path-plus");
    gen_cmd->add_option("--p", gen_p, "edge probability (gnp)");
    gen_cmd->add_option("--extra", gen_extra, "extra random edges (path-plus)");
    gen_cmd->add_option("--seed", gen_seed, "rng seed");
    gen_cmd->add_flag("--weighted", gen_weighted, "emit integer weights");
    gen_cmd->add_option("--wmin", gen_wmin, "minimum weight");
    gen_cmd->add_option("--wmax", gen_wmax, "maximum weight");
    gen_cmd->add_option("--out", gen_out, "output file")->required();

    // rp
    auto* rp_cmd = app.add_subcommand("rp", "replacement paths for every base-path edge");
    std::string rp_graph;
    int rp_s = 0, rp_t = -1;
    std::string rp_algo = "trees";
    bool rp_json = false, rp_witness = false;
    rp_cmd->add_option("graph", rp_graph, "graph file")->required();
    rp_cmd->add_option("--s", rp_s, "source vertex");
    rp_cmd->add_option("--t", rp_t, "target vertex (default n-1)");
    rp_cmd->add_option("--dn-algo", rp_algo, "detour-set algorithm: trees or decremental")
        ->check(CLI::IsMember({"trees", "decremental"}));
    rp_cmd->add_flag("--json", rp_json, "line-delimited json records");
    rp_cmd->add_flag("--witness", rp_witness, "include witness paths");

    // dso build/query
    auto* dso_cmd = app.add_subcommand("dso", "distance sensitivity oracle");
    dso_cmd->require_subcommand(1);
    auto* build_cmd = dso_cmd->add_subcommand("build", "preprocess a graph into a dso file");
    std::string db_graph, db_out;
    int db_L = 3, db_f = 1;
    double db_budget = 1e8;
    build_cmd->add_option("graph", db_graph, "graph file")->required();
    build_cmd->add_option("L", db_L, "hop parameter")->required();
    build_cmd->add_option("f", db_f, "max failures")->required();
    build_cmd->add_option("out", db_out, "output dso file")->required();
    build_cmd->add_option("--budget", db_budget, "node-count budget");

    auto* query_cmd = dso_cmd->add_subcommand("query", "query a stored dso");
    std::string dq_file;
    int dq_s = 0, dq_t = 0;
    std::vector<std::string> dq_fails;
    query_cmd->add_option("dso", dq_file, "dso file")->required();
    query_cmd->add_option("s", dq_s, "source")->required();
    query_cmd->add_option("t", dq_t, "target")->required();
    query_cmd->add_option("--fail", dq_fails, "failed element, v:<id> or e:<u>-<v>");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "cross-check algorithms against oracles");
    std::string vf_graph, vf_mode = "rp";
    int vf_budget = 200, vf_s = 0, vf_t = -1, vf_L = 3, vf_f = 1, vf_queries = 100;
    std::uint64_t vf_seed = 1;
    bool vf_inject = false;
    verify_cmd->add_option("graph", vf_graph, "graph file")->required();
    verify_cmd->add_option("--mode", vf_mode, "rp or dso")
        ->check(CLI::IsMember({"rp", "dso"}));
    verify_cmd->add_option("--budget", vf_budget, "max n accepted");
    verify_cmd->add_option("--s", vf_s, "source (rp)");
    verify_cmd->add_option("--t", vf_t, "target (rp, default n-1)");
    verify_cmd->add_option("--L", vf_L, "hop parameter (dso)");
    verify_cmd->add_option("--f", vf_f, "max failures (dso)");
    verify_cmd->add_option("--queries", vf_queries, "random queries (dso)");
    verify_cmd->add_option("--seed", vf_seed, "rng seed (dso)");
    verify_cmd->add_flag("--inject-rd-fault", vf_inject, "corrupt one rd entry (test hook)")
        ->group("");

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    Timer timer;
    int code = kExitUsage;
    try {
        if (*gen_cmd) {
            code = cmd_gen(gen_n, gen_model, gen_p, gen_extra, gen_seed, gen_weighted, gen_wmin,
                           gen_wmax, gen_out, out);
        } else if (*rp_cmd) {
            Graph g = read_graph_file(rp_graph);
            int t = rp_t < 0 ? g.n() - 1 : rp_t;
            require_vertex(g, rp_s, "source");
            require_vertex(g, t, "target");
            code = cmd_rp(g, rp_s, t, rp_algo, rp_json, rp_witness, out);
        } else if (*build_cmd) {
            code = cmd_dso_build(db_graph, db_L, db_f, db_out, db_budget, out);
        } else if (*query_cmd) {
            code = cmd_dso_query(dq_file, dq_s, dq_t, dq_fails, out);
        } else if (*verify_cmd) {
            Graph g = read_graph_file(vf_graph);
            if (g.n() > vf_budget) {
                err << "budget exceeded: n=" << g.n() << " > budget=" << vf_budget << '\n';
                return kExitCapacity;
            }
            if (vf_mode == "rp") {
                int t = vf_t < 0 ? g.n() - 1 : vf_t;
                require_vertex(g, vf_s, "source");
                require_vertex(g, t, "target");
                code = cmd_verify_rp(g, vf_s, t, vf_inject, out);
            } else {
                code = cmd_verify_dso(g, vf_L, vf_f, vf_queries, vf_seed, out);
            }
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ChecksumError& e) {
        err << "checksum mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const TooManyFailuresError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NegativeCycleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoPathError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "time_ms=" << timer.ms() << '\n';
    return code;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace ftsp::cli
