#include "bandcol/bench.hpp"

#include "bandcol/evaluation.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace bandcol {

Problem load_problem(const std::string& path, InstanceFileKind kind, const ParseOptions& opts) {
    ParsedInstance parsed = load_instance(path, kind, opts);
    Problem problem;
    problem.name = std::filesystem::path(path).stem().string();
    problem.kind = kind;
    problem.warnings = std::move(parsed.warnings);
    if (const BcpInstance* bcp = parsed.bcp()) {
        problem.bcp = *bcp;
    } else {
        SplitInstance split = bmcp_to_bcp(*parsed.bmcp());
        problem.bcp = std::move(split.bcp);
        problem.map = std::move(split.map);
        problem.bmcp = std::move(*std::get_if<BmcpInstance>(&parsed.instance));
    }
    return problem;
}

bool verify_solution(const Problem& problem, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != problem.bcp.vertex_count())
        return false;
    if (evaluate_direct(problem.bcp, coloring) != 0)
        return false;
    if (problem.bmcp)
        return bmcp_violations(*problem.bmcp, map_back(*problem.map, coloring), coloring.k()) == 0;
    return true;
}

std::vector<SuiteEntry> parse_suite(std::string_view text, const std::filesystem::path& base_dir) {
    std::vector<SuiteEntry> suite;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty())
            continue;
        if (tokens.size() < 3 || tokens.size() > 5)
            throw ParseError("suite entry must read 'path kind k [reps [time_limit]]'", ln);

        SuiteEntry entry;
        entry.label = tokens[0];
        const std::filesystem::path p(tokens[0]);
        entry.path = (p.is_absolute() ? p : base_dir / p).string();
        const auto kind = parse_kind(tokens[1]);
        if (!kind)
            throw ParseError("unknown instance kind '" + tokens[1] + "'", ln);
        entry.kind = *kind;
        auto integer = [&](const std::string& t, const char* what) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc{} || ptr != t.data() + t.size())
                throw ParseError(std::string("expected an integer ") + what + ", got '" + t + "'", ln);
            return value;
        };
        entry.k = integer(tokens[2], "k");
        if (entry.k < 1)
            throw ParseError("k must be positive", ln);
        if (tokens.size() >= 4) {
            entry.repetitions = integer(tokens[3], "repetition count");
            if (entry.repetitions < 1)
                throw ParseError("repetitions must be at least 1", ln);
        }
        if (tokens.size() == 5) {
            try {
                std::size_t used = 0;
                entry.time_limit = std::stod(tokens[4], &used);
                if (used != tokens[4].size())
                    throw std::invalid_argument(tokens[4]);
            } catch (const std::exception&) {
                throw ParseError("expected a time limit in seconds, got '" + tokens[4] + "'", ln);
            }
        }
        suite.push_back(std::move(entry));
    }
    return suite;
}

std::vector<SuiteEntry> load_suite(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_suite(buffer.str(), path.parent_path());
}

std::uint64_t bench_seed(std::uint64_t root, std::size_t entry, int rep) {
    return derive_seed(derive_seed(root, entry), static_cast<std::uint64_t>(rep));
}

BenchReport run_bench(const std::vector<SuiteEntry>& suite, const SolveParams& params, int jobs,
                      const ParseOptions& parse) {
    std::vector<Problem> problems;
    problems.reserve(suite.size());
    for (const SuiteEntry& e : suite)
        problems.push_back(load_problem(e.path, e.kind, parse));

    struct Task {
        std::size_t entry;
        int rep;
    };
    std::vector<Task> tasks;
    for (std::size_t e = 0; e < suite.size(); ++e)
        for (int rep = 0; rep < suite[e].repetitions; ++rep)
            tasks.push_back({e, rep});

    BenchReport report;
    report.records.resize(tasks.size());
    auto run_task = [&](std::size_t i) {
        const Task& t = tasks[i];
        const SuiteEntry& entry = suite[t.entry];
        SolveParams run = params;
        run.seed = bench_seed(params.seed, t.entry, t.rep);
        if (entry.time_limit)
            run.time_limit = *entry.time_limit;
        const SolveOutcome outcome = solve_k(problems[t.entry].bcp, entry.k, run);
        const bool legal = outcome.status == SolveStatus::legal_found &&
                           verify_solution(problems[t.entry], outcome.best_coloring);
        report.records[i] = {entry.label, entry.k, legal, outcome.best_f, outcome.elapsed,
                             outcome.ts_iterations, run.seed};
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                    run_task(i);
            });
    }

    for (std::size_t e = 0; e < suite.size(); ++e)
        report.summary.push_back({suite[e].label, suite[e].kind, suite[e].k});
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        SummaryRow& row = report.summary[tasks[i].entry];
        ++row.runs;
        row.successes += report.records[i].success;
        row.total_seconds += report.records[i].seconds;
    }
    return report;
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary, bool omit_time) {
    out << "instance,kind,k,suc,t_ave\n";
    for (const SummaryRow& row : summary) {
        out << row.instance << ',' << to_string(row.kind) << ',' << row.k << ',' << row.successes
            << '/' << row.runs << ',';
        if (omit_time)
            out << '-';
        else if (const auto t = row.time_per_hit())
            out << std::fixed << std::setprecision(3) << *t << std::defaultfloat;
        else
            out << "inf";
        out << '\n';
    }
}

} // namespace bandcol
