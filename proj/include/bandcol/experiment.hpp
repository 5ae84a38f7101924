#pragma once

#include "bandcol/driver.hpp"
#include "bandcol/instance.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bandcol {

enum class ExperimentMode {
    ts_vs_sd,     // full algorithm with tabu search vs. with steepest descent
    pr1_vs_pr2,   // random vs. greedy relinking, sampled per local search
    alpha_sweep,  // tabu depth 5000 / 10000 / 50000 over a fixed number of generations
};

std::string_view to_string(ExperimentMode mode) noexcept;
/// Throws std::invalid_argument for an unknown name.
ExperimentMode parse_experiment_mode(std::string_view name);

struct ExperimentOptions {
    int repetitions = 5;
    /// Generation budget of alpha_sweep (replaces the time limit there).
    std::int64_t generations = 3000;
    std::vector<std::int64_t> alphas{5'000, 10'000, 50'000};
};

/// Final state of one series (one tag, one repetition).
struct SeriesSummary {
    std::string tag;
    int run = 0;
    std::uint64_t seed = 0;
    std::int64_t final_best_f = 0;
    std::int64_t generations = 0;
    std::int64_t points = 0;
    double elapsed = 0.0;
};

/// Runs the experiment and streams trace rows
///   mode,tag,run,seed,elapsed,generation,ls_calls,best_f,mean_f,offspring_f
/// with a header line. Repetition r of every tag uses seed derive_seed(params.seed, r).
std::vector<SeriesSummary> run_experiment(ExperimentMode mode, const BcpInstance& inst, int k,
                                          const SolveParams& params,
                                          const ExperimentOptions& options, std::ostream& trace);

} // namespace bandcol
