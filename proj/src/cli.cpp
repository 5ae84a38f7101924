#include "bandcol/cli.hpp"

#include "bandcol/bench.hpp"
#include "bandcol/driver.hpp"
#include "bandcol/evaluation.hpp"
#include "bandcol/experiment.hpp"
#include "bandcol/io.hpp"
#include "bandcol/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace bandcol {

namespace {

/// Usage-level failure: bad flags, unreadable or invalid input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view status_name(SolveStatus s) {
    return s == SolveStatus::legal_found ? "legal_found" : "timeout";
}

void print_outcome(std::ostream& out, int k, const SolveOutcome& o) {
    out << "k=" << k << " status=" << status_name(o.status) << " f=" << o.best_f << " elapsed="
        << std::fixed << std::setprecision(3) << o.elapsed << std::defaultfloat
        << " generations=" << o.generations << " ts_calls=" << o.ts_calls
        << " ts_iterations=" << o.ts_iterations << " restarts=" << o.restarts << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file)
        throw UsageError("cannot write " + path);
    file << text;
}

std::string read_text(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct InputFlags {
    std::string kind = "bcp";
    bool strict = false;
    bool demand_block = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "instance kind")->check(CLI::IsMember({"bcp", "bmcp"}));
        cmd->add_flag("--strict", strict, "reject unknown line types and edge-count mismatches");
        cmd->add_flag("--demand-block", demand_block,
                      "bmcp demands are a block of n integers after the header");
    }

    Problem load(const std::string& path, std::ostream& err) const {
        Problem p = load_problem(path, *parse_kind(kind), {strict, demand_block});
        for (const auto& w : p.warnings)
            err << "warning: " << w << '\n';
        return p;
    }
};

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Path relinking solver for bandwidth coloring and multicoloring"};
    app.require_subcommand(1);
    app.fallthrough();

    SolveParams params;
    std::string strategy = "pr1";
    app.add_option("--seed", params.seed, "root random seed");
    app.add_option("--time-limit", params.time_limit, "seconds per k (<= 0: unlimited)");
    app.add_option("--p", params.p, "population size")->check(CLI::Range(2, 100000));
    app.add_option("--alpha", params.alpha, "tabu search depth (moves per call)")
        ->check(CLI::PositiveNumber);
    app.add_option("--xi", params.xi, "relinking distance parameter in (0, 1)")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--strategy", strategy, "relinking strategy")
        ->check(CLI::IsMember({"pr1", "pr2"}));
    app.add_option("--tenure-base", params.tenure_base, "constant part of the tabu tenure")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--tenure-coeff", params.tenure_coeff, "tabu tenure per unit of f")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--tenure-random", params.tenure_random,
                   "random tenure part drawn from 0..N-1")
        ->check(CLI::NonNegativeNumber);

    InputFlags input;
    std::string file, solution_path, output;
    int k = 0;

    auto* solve = app.add_subcommand("solve", "solve k-BCP for a fixed k");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    solve->add_option("-o,--output", output, "solution file (default: <file>.sol)");
    input.attach(solve);

    std::optional<int> k_start;
    auto* minimize = app.add_subcommand("minimize", "decrease k until no legal coloring is found");
    minimize->add_option("file", file, "instance file")->required();
    minimize->add_option("--k-start", k_start, "first k to try (default: greedy bound - 1)");
    minimize->add_option("-o,--output", output, "solution file for the best k");
    input.attach(minimize);

    auto* convert = app.add_subcommand("convert", "write the BCP form of a BMCP instance");
    convert->add_option("file", file, "BMCP instance file")->required();
    convert->add_option("-o,--output", output, "BCP instance file")->required();
    bool strict_convert = false, block_convert = false;
    convert->add_flag("--strict", strict_convert);
    convert->add_flag("--demand-block", block_convert);

    auto* check = app.add_subcommand("check", "evaluate a solution file");
    check->add_option("file", file, "instance file")->required();
    check->add_option("solution", solution_path, "solution file")->required();
    check->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    input.attach(check);

    std::optional<int> oracle_k;
    auto* oracle = app.add_subcommand("oracle", "exact solver for tiny instances");
    oracle->add_option("file", file, "instance file")->required();
    oracle->add_option("--k", oracle_k, "decide feasibility at this k instead of minimizing");
    OracleLimits limits;
    oracle->add_option("--max-vertices", limits.max_vertices);
    oracle->add_option("--max-k", limits.max_k);
    oracle->add_option("--node-budget", limits.node_budget);
    input.attach(oracle);

    std::string suite_path, jsonl_path, summary_path;
    int jobs = 1;
    bool omit_time = false;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    bench->add_option("suite", suite_path, "suite file: 'path kind k [reps [time_limit]]' per line")
        ->required();
    bench->add_option("-o,--output", output, "results table (default: stdout)");
    bench->add_option("--jsonl", jsonl_path, "results as one JSON object per line");
    bench->add_option("--summary", summary_path, "summary table (default: stdout)");
    bench->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);
    bench->add_flag("--omit-time", omit_time, "write '-' for wall times");
    bool bench_strict = false, bench_block = false;
    bench->add_flag("--strict", bench_strict);
    bench->add_flag("--demand-block", bench_block);

    std::string mode;
    ExperimentOptions exp_options;
    auto* experiment = app.add_subcommand("experiment", "comparison experiments");
    experiment->add_option("mode", mode, "ts_vs_sd | pr1_vs_pr2 | alpha_sweep")->required();
    experiment->add_option("file", file, "instance file")->required();
    experiment->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    experiment->add_option("--reps", exp_options.repetitions, "repetitions")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--generations", exp_options.generations,
                           "generation budget of alpha_sweep")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--alphas", exp_options.alphas, "depths compared by alpha_sweep");
    experiment->add_option("-o,--output", output, "trace file (default: stdout)");
    input.attach(experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    params.strategy = strategy == "pr2" ? RelinkStrategy::pr2_greedy : RelinkStrategy::pr1_random;
    if (!(params.xi > 0.0 && params.xi < 1.0)) {
        err << "error: --xi must lie strictly between 0 and 1\n";
        return exit_usage;
    }

    try {
        if (*solve) {
            const Problem problem = input.load(file, err);
            const SolveOutcome o = solve_k(problem.bcp, k, params);
            print_outcome(out, k, o);
            if (o.status != SolveStatus::legal_found)
                return exit_unsolved;
            if (!verify_solution(problem, o.best_coloring)) {
                err << "error: reported solution failed verification\n";
                return exit_internal;
            }
            const std::string path = output.empty() ? file + ".sol" : output;
            write_text(path, write_solution(o.best_coloring));
            out << "solution written to " << path << '\n';
            return exit_ok;
        }
        if (*minimize) {
            const Problem problem = input.load(file, err);
            const MinimizeResult r = minimize_k(problem.bcp, params, k_start);
            for (const KAttempt& a : r.attempts)
                print_outcome(out, a.k, a.outcome);
            if (!r.best_k) {
                out << "no legal coloring found\n";
                return exit_unsolved;
            }
            if (!verify_solution(problem, *r.best_coloring)) {
                err << "error: reported solution failed verification\n";
                return exit_internal;
            }
            out << "best_k=" << *r.best_k << '\n';
            if (!output.empty()) {
                write_text(output, write_solution(*r.best_coloring));
                out << "solution written to " << output << '\n';
            }
            return exit_ok;
        }
        if (*convert) {
            const ParsedInstance parsed =
                load_instance(file, InstanceFileKind::bmcp, {strict_convert, block_convert});
            for (const auto& w : parsed.warnings)
                err << "warning: " << w << '\n';
            const SplitInstance split = bmcp_to_bcp(*parsed.bmcp());
            std::ofstream target(output);
            if (!target)
                throw UsageError("cannot write " + output);
            write_instance(target, split.bcp, "split form of " + file);
            out << "vertices=" << split.bcp.vertex_count() << " edges=" << split.bcp.edge_count()
                << '\n';
            return exit_ok;
        }
        if (*check) {
            const Problem problem = input.load(file, err);
            const Coloring s = parse_solution(read_text(solution_path), k, problem.bcp.vertex_count());
            const std::int64_t f = evaluate_direct(problem.bcp, s);
            out << "f=" << f << '\n';
            bool legal = f == 0;
            if (problem.bmcp) {
                const std::int64_t bad = bmcp_violations(*problem.bmcp, map_back(*problem.map, s), k);
                out << "bmcp_violations=" << bad << '\n';
                legal = legal && bad == 0;
            }
            return legal ? exit_ok : exit_unsolved;
        }
        if (*oracle) {
            const Problem problem = input.load(file, err);
            if (oracle_k) {
                const FeasibilityResult r = exact_feasible(problem.bcp, *oracle_k, limits);
                if (r.status == Feasibility::unknown) {
                    out << "unknown (node budget exhausted after " << r.nodes << " nodes)\n";
                    return exit_unsolved;
                }
                out << (r.status == Feasibility::feasible ? "feasible" : "infeasible") << " k="
                    << *oracle_k << " nodes=" << r.nodes << '\n';
                if (r.witness)
                    out << write_solution(*r.witness);
                return r.status == Feasibility::feasible ? exit_ok : exit_unsolved;
            }
            const MinKResult r = exact_min_k(problem.bcp, limits);
            if (!r.k) {
                out << "unknown (node budget exhausted after " << r.nodes << " nodes)\n";
                return exit_unsolved;
            }
            out << "min_k=" << *r.k << " nodes=" << r.nodes << '\n' << write_solution(*r.witness);
            return exit_ok;
        }
        if (*bench) {
            const auto suite = load_suite(suite_path);
            const BenchReport report = run_bench(suite, params, jobs, {bench_strict, bench_block});
            const RecordFormat format{omit_time};
            if (output.empty()) {
                write_records_csv(out, report.records, format);
            } else {
                std::ofstream table(output);
                if (!table)
                    throw UsageError("cannot write " + output);
                write_records_csv(table, report.records, format);
            }
            if (!jsonl_path.empty()) {
                std::ofstream jsonl(jsonl_path);
                if (!jsonl)
                    throw UsageError("cannot write " + jsonl_path);
                write_records_jsonl(jsonl, report.records, format);
            }
            if (summary_path.empty()) {
                write_summary(out, report.summary, omit_time);
            } else {
                std::ofstream summary(summary_path);
                if (!summary)
                    throw UsageError("cannot write " + summary_path);
                write_summary(summary, report.summary, omit_time);
            }
            return exit_ok;
        }
        if (*experiment) {
            const ExperimentMode m = parse_experiment_mode(mode);
            const Problem problem = input.load(file, err);
            std::vector<SeriesSummary> series;
            if (output.empty()) {
                series = run_experiment(m, problem.bcp, k, params, exp_options, out);
            } else {
                std::ofstream trace(output);
                if (!trace)
                    throw UsageError("cannot write " + output);
                series = run_experiment(m, problem.bcp, k, params, exp_options, trace);
            }
            for (const SeriesSummary& s : series)
                err << s.tag << " run=" << s.run << " best_f=" << s.final_best_f
                    << " generations=" << s.generations << " points=" << s.points << '\n';
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InstanceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

} // namespace bandcol
