#include "bandcol/bench.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bandcol;

namespace {

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "bandcol_bench_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("suite parsing") {
    const auto suite = parse_suite("# comment\n\ngeom/a.col bcp 21\nb.col bmcp 40 5 120 # note\n",
                                   "/data");
    REQUIRE(suite.size() == 2);
    CHECK(suite[0].path == "/data/geom/a.col");
    CHECK(suite[0].label == "geom/a.col");
    CHECK(suite[0].repetitions == 20);
    CHECK_FALSE(suite[0].time_limit);
    CHECK(suite[1].kind == InstanceFileKind::bmcp);
    CHECK(suite[1].repetitions == 5);
    CHECK(suite[1].time_limit == 120.0);

    CHECK_THROWS_AS(parse_suite("a.col bcp\n", "."), ParseError);
    CHECK_THROWS_AS(parse_suite("a.col col 3\n", "."), ParseError);
    CHECK_THROWS_AS(parse_suite("a.col bcp x\n", "."), ParseError);
    CHECK_THROWS_AS(parse_suite("a.col bcp 3 0\n", "."), ParseError);
    CHECK_THROWS_AS(parse_suite("a.col bcp 3 2 soon\n", "."), ParseError);
}

TEST_CASE("bench runs every repetition and summarizes") {
    const auto dir = scratch_dir();
    write_file(dir / "tri.col", "p edge 3 3\ne 1 2 2\ne 2 3 2\ne 1 3 2\n");
    write_file(dir / "multi.col", "p edge 2 3\nn 1 2\nn 2 2\ne 1 1 1\ne 2 2 3\ne 1 2 2\n");
    write_file(dir / "suite.txt", "tri.col bcp 5 3\ntri.col bcp 4 2 0.2\nmulti.col bmcp 6 2\n");

    SolveParams params;
    params.time_limit = 5;
    params.alpha = 500;
    const BenchReport report = run_bench(load_suite(dir / "suite.txt"), params);
    REQUIRE(report.records.size() == 7);
    REQUIRE(report.summary.size() == 3);
    CHECK(report.summary[0].successes == 3);
    CHECK(report.summary[1].successes == 0);
    CHECK_FALSE(report.summary[1].time_per_hit());
    CHECK(report.summary[2].successes == 2);

    int from_records = 0;
    for (const RunRecord& r : report.records) {
        CHECK(r.success == (r.f == 0));
        from_records += r.success;
    }
    CHECK(from_records == 5);

    std::ostringstream summary;
    write_summary(summary, report.summary, true);
    CHECK(summary.str() ==
          "instance,kind,k,suc,t_ave\n"
          "tri.col,bcp,5,3/3,-\n"
          "tri.col,bcp,4,0/2,-\n"
          "multi.col,bmcp,6,2/2,-\n");
    std::ostringstream timed;
    write_summary(timed, report.summary);
    CHECK(timed.str().find("tri.col,bcp,4,0/2,inf") != std::string::npos);
}

TEST_CASE("bench seeds depend on entry and repetition only") {
    CHECK(bench_seed(1, 0, 0) != bench_seed(1, 0, 1));
    CHECK(bench_seed(1, 0, 1) != bench_seed(1, 1, 0));
    CHECK(bench_seed(7, 2, 3) == bench_seed(7, 2, 3));
}

TEST_CASE("parallel and sequential bench agree") {
    const auto dir = scratch_dir();
    write_file(dir / "k3.col", "p edge 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    write_file(dir / "par.txt", "k3.col bcp 3 6\n");
    SolveParams params;
    params.time_limit = 5;
    const auto suite = load_suite(dir / "par.txt");
    const BenchReport a = run_bench(suite, params, 1), b = run_bench(suite, params, 3);
    std::ostringstream ta, tb;
    write_records_csv(ta, a.records, {true});
    write_records_csv(tb, b.records, {true});
    CHECK(ta.str() == tb.str());
}
