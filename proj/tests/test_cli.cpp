#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ftsp/io.hpp"
#include "ftsp/shortest_paths.hpp"

namespace cli = ftsp::cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ftsp_cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen writes the documented header for the trivial graph") {
    TempFile f("trivial.graph");
    auto r = run({"gen", "--n", "1", "--model", "gnp", "--p", "0", "--seed", "1", "--out", f.path});
    CHECK(r.code == cli::kExitOk);
    std::ifstream in(f.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "1 0 directed unit");
}

TEST_CASE("gen is byte-deterministic for a fixed seed") {
    TempFile a("det_a.graph"), b("det_b.graph");
    auto ra = run({"gen", "--n", "30", "--model", "gnp", "--p", "0.2", "--seed", "7", "--out", a.path});
    auto rb = run({"gen", "--n", "30", "--model", "gnp", "--p", "0.2", "--seed", "7", "--out", b.path});
    CHECK(ra.code == 0);
    CHECK(rb.code == 0);
    std::ifstream ia(a.path), ib(b.path);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().size() > 0);
}

TEST_CASE("gen edge count matches its own report and reparses") {
    TempFile f("recount.graph");
    auto r = run({"gen", "--n", "30", "--model", "gnp", "--p", "0.2", "--seed", "7", "--out", f.path});
    REQUIRE(r.code == 0);
    ftsp::Graph g = ftsp::read_graph_file(f.path);
    std::ostringstream expect;
    expect << "gen n=30 m=" << g.m() << " model=gnp seed=7 out=" << f.path << '\n';
    CHECK(r.out == expect.str());
}

TEST_CASE("rp on a single edge serializes infinity") {
    TempFile f("single.graph");
    {
        std::ofstream out(f.path);
        out << "2 1 directed unit\n0 1\n";
    }
    auto text = run({"rp", f.path, "--s", "0", "--t", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("edge i=0 u=0 v=1 len=inf") != std::string::npos);

    auto json = run({"rp", f.path, "--s", "0", "--t", "1", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"len\":null") != std::string::npos);
}

TEST_CASE("rp reports the 4-vertex example") {
    TempFile f("four.graph");
    {
        std::ofstream out(f.path);
        out << "4 4 directed unit\n0 1\n1 2\n0 3\n3 2\n";
    }
    auto r = run({"rp", f.path, "--s", "0", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("edge i=0 u=0 v=1 len=2") != std::string::npos);
    CHECK(r.out.find("edge i=1 u=1 v=2 len=2") != std::string::npos);
    CHECK(r.out.find("counters pq_push=") != std::string::npos);
}

TEST_CASE("rp detour algorithms agree on a seeded input") {
    TempFile f("agree.graph");
    REQUIRE(run({"gen", "--n", "40", "--model", "path-plus", "--extra", "60", "--seed", "5",
                 "--out", f.path}).code == 0);
    auto trees = run({"rp", f.path, "--s", "0", "--t", "39", "--dn-algo", "trees"});
    auto decr = run({"rp", f.path, "--s", "0", "--t", "39", "--dn-algo", "decremental"});
    REQUIRE(trees.code == 0);
    REQUIRE(decr.code == 0);
    // identical per-edge records; header and operation counters may differ
    auto edge_lines = [](const std::string& s) {
        std::istringstream in(s);
        std::string line, acc;
        while (std::getline(in, line))
            if (line.rfind("edge ", 0) == 0) acc += line + '\n';
        return acc;
    };
    CHECK(edge_lines(trees.out) == edge_lines(decr.out));
    CHECK(!edge_lines(trees.out).empty());
}

TEST_CASE("rp rejects weighted graphs") {
    TempFile f("weighted.graph");
    {
        std::ofstream out(f.path);
        out << "2 1 directed weighted\n0 1 5\n";
    }
    auto r = run({"rp", f.path, "--s", "0", "--t", "1"});
    CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("dso build then query equals dijkstra without failures") {
    TempFile g("dso_in.graph"), d("dso_out.dso");
    REQUIRE(run({"gen", "--n", "12", "--model", "gnp", "--p", "0.3", "--seed", "9", "--weighted",
                 "--wmin", "1", "--wmax", "9", "--out", g.path}).code == 0);
    auto built = run({"dso", "build", g.path, "3", "2", d.path});
    REQUIRE(built.code == 0);

    ftsp::Graph graph = ftsp::read_graph_file(g.path);
    auto dj = ftsp::dijkstra(graph, 0);
    auto q = run({"dso", "query", d.path, "0", "7"});
    REQUIRE(q.code == 0);
    std::ostringstream expect;
    expect << "dso_query s=0 t=7 failures=0 dist=" << ftsp::format_weight(dj.dist[7]) << '\n';
    CHECK(q.out == expect.str());
}

TEST_CASE("dso query with the target failed is infinite") {
    TempFile g("dso_tf.graph"), d("dso_tf.dso");
    REQUIRE(run({"gen", "--n", "8", "--model", "gnp", "--p", "0.4", "--seed", "3", "--weighted",
                 "--out", g.path}).code == 0);
    REQUIRE(run({"dso", "build", g.path, "3", "1", d.path}).code == 0);
    auto q = run({"dso", "query", d.path, "0", "5", "--fail", "v:5"});
    CHECK(q.code == 0);
    CHECK(q.out == "dso_query s=0 t=5 failures=1 dist=inf\n");
}

TEST_CASE("dso query rejects malformed failure specs naming the token") {
    TempFile g("dso_bad.graph"), d("dso_bad.dso");
    REQUIRE(run({"gen", "--n", "6", "--model", "gnp", "--p", "0.4", "--seed", "3", "--weighted",
                 "--out", g.path}).code == 0);
    REQUIRE(run({"dso", "build", g.path, "2", "1", d.path}).code == 0);
    for (const std::string bad : {"x:3", "v:amy", "e:2", "e:2_5", "v:3:4"}) {
        auto q = run({"dso", "query", d.path, "0", "1", "--fail", bad});
        CHECK(q.code == cli::kExitUsage);
        CHECK(q.err.find(bad) != std::string::npos);
    }
}

TEST_CASE("dso query rejects too many failures") {
    TempFile g("dso_many.graph"), d("dso_many.dso");
    REQUIRE(run({"gen", "--n", "6", "--model", "gnp", "--p", "0.4", "--seed", "3", "--weighted",
                 "--out", g.path}).code == 0);
    REQUIRE(run({"dso", "build", g.path, "2", "1", d.path}).code == 0);
    auto q = run({"dso", "query", d.path, "0", "1", "--fail", "v:2", "--fail", "v:3"});
    CHECK(q.code == cli::kExitUsage);
}

TEST_CASE("dso build reports capacity exhaustion") {
    TempFile g("dso_cap.graph"), d("dso_cap.dso");
    REQUIRE(run({"gen", "--n", "30", "--model", "gnp", "--p", "0.2", "--seed", "3", "--weighted",
                 "--out", g.path}).code == 0);
    auto r = run({"dso", "build", g.path, "4", "2", d.path, "--budget", "1000"});
    CHECK(r.code == cli::kExitCapacity);
}

TEST_CASE("corrupted dso files are reported as mismatches") {
    TempFile g("dso_cor.graph"), d("dso_cor.dso");
    REQUIRE(run({"gen", "--n", "6", "--model", "gnp", "--p", "0.4", "--seed", "4", "--weighted",
                 "--out", g.path}).code == 0);
    REQUIRE(run({"dso", "build", g.path, "2", "1", d.path}).code == 0);
    {
        std::ifstream in(d.path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        size_t pos = text.find("trees");
        text[pos] = 'x';
        std::ofstream out(d.path);
        out << text;
    }
    auto q = run({"dso", "query", d.path, "0", "1"});
    CHECK(q.code == cli::kExitMismatch);
}

TEST_CASE("verify rp passes on a correct build and fails with the test hook") {
    TempFile f("verify.graph");
    REQUIRE(run({"gen", "--n", "30", "--model", "path-plus", "--extra", "45", "--seed", "11",
                 "--out", f.path}).code == 0);
    auto ok = run({"verify", f.path, "--mode", "rp"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("mismatches=0") != std::string::npos);

    auto bad = run({"verify", f.path, "--mode", "rp", "--inject-rd-fault"});
    CHECK(bad.code == cli::kExitMismatch);
    CHECK(bad.out.find("mismatch edge_index=") != std::string::npos);
}

TEST_CASE("verify dso passes on a correct build") {
    TempFile f("verify_dso.graph");
    REQUIRE(run({"gen", "--n", "14", "--model", "gnp", "--p", "0.3", "--seed", "13", "--weighted",
                 "--wmin", "1", "--wmax", "9", "--out", f.path}).code == 0);
    auto ok = run({"verify", f.path, "--mode", "dso", "--L", "3", "--f", "2", "--queries", "80"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("verify enforces its vertex budget") {
    TempFile f("verify_budget.graph");
    REQUIRE(run({"gen", "--n", "50", "--model", "gnp", "--p", "0.1", "--seed", "2", "--out",
                 f.path}).code == 0);
    auto r = run({"verify", f.path, "--mode", "rp", "--budget", "40"});
    CHECK(r.code == cli::kExitCapacity);
}

TEST_CASE("structured stdout is byte-identical across reruns") {
    TempFile f("rerun.graph");
    REQUIRE(run({"gen", "--n", "25", "--model", "gnp", "--p", "0.25", "--seed", "21", "--out",
                 f.path}).code == 0);
    auto a = run({"rp", f.path, "--s", "0", "--t", "24", "--witness"});
    auto b = run({"rp", f.path, "--s", "0", "--t", "24", "--witness"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}
