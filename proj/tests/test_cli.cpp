#include "bandcol/cli.hpp"
#include "bandcol/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bandcol;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bandcol");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string dir() {
    const auto d = std::filesystem::temp_directory_path() / "bandcol_cli_test";
    std::filesystem::create_directories(d);
    return d.string() + "/";
}

std::string put(const std::string& name, const std::string& text) {
    const std::string path = dir() + name;
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string triangle = "p edge 3 3\ne 1 2 2\ne 2 3 2\ne 1 3 2\n";

} // namespace

TEST_CASE("check a legal solution") {
    const auto inst = put("tri.col", triangle);
    const auto sol = put("tri.sol", "v 1 1\nv 2 3\nv 3 5\n");
    const Run r = cli({"check", inst, sol, "--k", "5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "f=0\n");
}

TEST_CASE("check an illegal solution") {
    const auto inst = put("tri.col", triangle);
    const auto sol = put("bad.sol", "v 1 1\nv 2 2\nv 3 5\n");
    const Run r = cli({"check", inst, sol, "--k", "5"});
    CHECK(r.code == exit_unsolved);
    CHECK(r.out == "f=1\n");
}

TEST_CASE("solve writes a verified solution") {
    const auto inst = put("tri.col", triangle);
    const auto sol = dir() + "solved.sol";
    std::filesystem::remove(sol);
    const Run r = cli({"--time-limit", "5", "--seed", "3", "solve", inst, "--k", "5", "-o", sol});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("status=legal_found") != std::string::npos);
    CHECK(cli({"check", inst, sol, "--k", "5"}).code == exit_ok);
}

TEST_CASE("solve reports a timeout") {
    const auto inst = put("tri.col", triangle);
    const Run r = cli({"--time-limit", "0.2", "solve", inst, "--k", "4"});
    CHECK(r.code == exit_unsolved);
    CHECK(r.out.find("status=timeout") != std::string::npos);
}

TEST_CASE("minimize") {
    const auto inst = put("tri.col", triangle);
    const auto sol = dir() + "min.sol";
    const Run r = cli({"--time-limit", "0.2", "minimize", inst, "-o", sol});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("best_k=5") != std::string::npos);
    CHECK(parse_solution(slurp(sol)).k() <= 5);
}

TEST_CASE("convert a demand-2 pair") {
    const auto inst = put("pair.col", "p edge 2 3\nn 1 2\nn 2 2\ne 1 1 1\ne 2 2 3\ne 1 2 2\n");
    const auto out = dir() + "pair_bcp.col";
    const Run r = cli({"convert", inst, "-o", out});
    CHECK(r.code == exit_ok);
    const ParsedInstance p = parse_instance_text(slurp(out), InstanceFileKind::bcp, {true});
    CHECK(p.bcp()->vertex_count() == 4);
    CHECK(p.bcp()->edge_count() == 6);
}

TEST_CASE("bmcp check maps back") {
    const auto inst = put("pair.col", "p edge 2 3\nn 1 2\nn 2 2\ne 1 1 1\ne 2 2 3\ne 1 2 2\n");
    const auto sol = put("pair.sol", "v 1 1\nv 2 2\nv 3 4\nv 4 7\n");
    const Run r = cli({"check", inst, sol, "--k", "7", "--kind", "bmcp"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "f=0\nbmcp_violations=0\n");
}

TEST_CASE("oracle") {
    const auto inst = put("tri.col", triangle);
    Run r = cli({"oracle", inst});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("min_k=5", 0) == 0);
    r = cli({"oracle", inst, "--k", "4"});
    CHECK(r.code == exit_unsolved);
    CHECK(r.out.rfind("infeasible", 0) == 0);
}

TEST_CASE("bench output is reproducible") {
    put("k3.col", "p edge 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    const auto suite = put("suite.txt", "k3.col bcp 3 4\n");
    const Run a = cli({"--seed", "9", "bench", suite, "--omit-time"});
    const Run b = cli({"--seed", "9", "bench", suite, "--omit-time"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
    CHECK(a.out.find("k3.col,bcp,3,4/4,-") != std::string::npos);
}

TEST_CASE("experiment writes a trace") {
    const auto inst = put("tri.col", triangle);
    const auto trace = dir() + "trace.csv";
    const Run r = cli({"--time-limit", "0.1", "--alpha", "50", "--p", "3", "experiment", "ts_vs_sd",
                       inst, "--k", "4", "--reps", "1", "-o", trace});
    CHECK(r.code == exit_ok);
    CHECK(slurp(trace).rfind("mode,tag,run,seed", 0) == 0);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"solve"}).code == exit_usage);
    CHECK(cli({"--strategy", "pr3", "solve", "x", "--k", "3"}).code == exit_usage);
    CHECK(cli({"--xi", "1", "solve", "x", "--k", "3"}).code == exit_usage);
    CHECK(cli({"solve", dir() + "missing.col", "--k", "3"}).code == exit_usage);
    const auto bad = put("bad.col", "e 1 2 3\n");
    const Run r = cli({"solve", bad, "--k", "3"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("before") != std::string::npos);
    const auto inst = put("tri.col", triangle);
    CHECK(cli({"experiment", "nope", inst, "--k", "3"}).code == exit_usage);
    CHECK(cli({"--help"}).code == exit_ok);
}
