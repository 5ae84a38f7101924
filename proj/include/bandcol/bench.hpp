#pragma once

#include "bandcol/driver.hpp"
#include "bandcol/instance.hpp"
#include "bandcol/io.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bandcol {

/// A problem ready for the BCP solver: either a BCP instance as read, or the
/// split form of a BMCP instance together with the original.
struct Problem {
    std::string name;
    InstanceFileKind kind = InstanceFileKind::bcp;
    BcpInstance bcp;
    std::optional<BmcpInstance> bmcp;
    std::optional<VertexMap> map;
    std::vector<std::string> warnings;
};

Problem load_problem(const std::string& path, InstanceFileKind kind, const ParseOptions& opts = {});

/// True iff `coloring` is legal for the BCP form and, for BMCP problems, the
/// mapped-back multicoloring passes the direct BMCP check.
bool verify_solution(const Problem& problem, const Coloring& coloring);

struct SuiteEntry {
    std::string path;  // resolved against the suite file's directory
    std::string label; // path as written in the suite file
    InstanceFileKind kind = InstanceFileKind::bcp;
    int k = 0;
    int repetitions = 20;
    std::optional<double> time_limit;  // overrides the global limit
};

/// Suite text: one "path kind k [reps [time_limit]]" entry per line, '#'
/// starts a comment. Relative paths are resolved against `base_dir`.
std::vector<SuiteEntry> parse_suite(std::string_view text, const std::filesystem::path& base_dir);
std::vector<SuiteEntry> load_suite(const std::filesystem::path& path);

struct SummaryRow {
    std::string instance;
    InstanceFileKind kind = InstanceFileKind::bcp;
    int k = 0;
    int runs = 0;
    int successes = 0;
    double total_seconds = 0.0;

    /// Total time divided by the number of successful runs; empty when none succeeded.
    std::optional<double> time_per_hit() const {
        if (successes == 0)
            return std::nullopt;
        return total_seconds / successes;
    }
};

struct BenchReport {
    std::vector<RunRecord> records;  // ordered by (entry, repetition)
    std::vector<SummaryRow> summary;
};

/// Seed of repetition `rep` of entry `entry`.
std::uint64_t bench_seed(std::uint64_t root, std::size_t entry, int rep);

/// Runs every repetition of every entry; `jobs` > 1 spreads runs over threads.
/// Every success is re-verified before it is recorded as one.
BenchReport run_bench(const std::vector<SuiteEntry>& suite, const SolveParams& params, int jobs = 1,
                      const ParseOptions& parse = {});

void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary, bool omit_time = false);

} // namespace bandcol
