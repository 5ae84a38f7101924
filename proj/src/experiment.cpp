#include "bandcol/experiment.hpp"

#include <iomanip>
#include <stdexcept>

namespace bandcol {

std::string_view to_string(ExperimentMode mode) noexcept {
    switch (mode) {
    case ExperimentMode::ts_vs_sd:
        return "ts_vs_sd";
    case ExperimentMode::pr1_vs_pr2:
        return "pr1_vs_pr2";
    case ExperimentMode::alpha_sweep:
        return "alpha_sweep";
    }
    return "?";
}

ExperimentMode parse_experiment_mode(std::string_view name) {
    for (auto mode : {ExperimentMode::ts_vs_sd, ExperimentMode::pr1_vs_pr2,
                      ExperimentMode::alpha_sweep})
        if (name == to_string(mode))
            return mode;
    throw std::invalid_argument("unknown experiment mode '" + std::string(name) +
                                "' (expected ts_vs_sd, pr1_vs_pr2 or alpha_sweep)");
}

namespace {

struct Variant {
    std::string tag;
    SolveParams params;
    SampleKind sampled_extra;  // recorded in addition to population samples
    bool population_samples = true;
};

std::vector<Variant> variants_of(ExperimentMode mode, const SolveParams& base,
                                 const ExperimentOptions& options) {
    std::vector<Variant> out;
    switch (mode) {
    case ExperimentMode::ts_vs_sd: {
        SolveParams sd = base;
        sd.local_search = LocalSearchKind::steepest_descent;
        SolveParams ts = base;
        ts.local_search = LocalSearchKind::tabu;
        out.push_back({"TS", ts, SampleKind::generation});
        out.push_back({"SD", sd, SampleKind::generation});
        break;
    }
    case ExperimentMode::pr1_vs_pr2: {
        SolveParams pr1 = base, pr2 = base;
        pr1.strategy = RelinkStrategy::pr1_random;
        pr2.strategy = RelinkStrategy::pr2_greedy;
        out.push_back({"PR1", pr1, SampleKind::offspring});
        out.push_back({"PR2", pr2, SampleKind::offspring});
        break;
    }
    case ExperimentMode::alpha_sweep:
        for (const std::int64_t alpha : options.alphas) {
            SolveParams p = base;
            p.alpha = alpha;
            p.max_generations = options.generations;
            p.time_limit = 0.0;
            out.push_back({"alpha=" + std::to_string(alpha), p, SampleKind::generation, false});
        }
        break;
    }
    return out;
}

} // namespace

std::vector<SeriesSummary> run_experiment(ExperimentMode mode, const BcpInstance& inst, int k,
                                          const SolveParams& params,
                                          const ExperimentOptions& options, std::ostream& trace) {
    if (options.repetitions < 1)
        throw std::invalid_argument("repetitions must be at least 1");
    trace << "mode,tag,run,seed,elapsed,generation,ls_calls,best_f,mean_f,offspring_f\n";
    std::vector<SeriesSummary> summaries;
    for (int run = 0; run < options.repetitions; ++run) {
        const std::uint64_t seed = derive_seed(params.seed, static_cast<std::uint64_t>(run));
        for (Variant& variant : variants_of(mode, params, options)) {
            variant.params.seed = seed;
            SeriesSummary summary{variant.tag, run, seed};
            auto observer = [&](const ProgressSample& s) {
                const bool wanted = s.kind == variant.sampled_extra ||
                                    (variant.population_samples && s.kind == SampleKind::population);
                if (!wanted)
                    return;
                ++summary.points;
                trace << to_string(mode) << ',' << variant.tag << ',' << run << ',' << seed << ','
                      << std::fixed << std::setprecision(4) << s.elapsed << ',' << s.generation
                      << ',' << s.ts_calls << ',' << s.best_f << ',' << std::setprecision(3)
                      << s.mean_f << std::defaultfloat << ',';
                if (s.offspring_f >= 0)
                    trace << s.offspring_f;
                trace << '\n';
            };
            const SolveOutcome outcome = solve_k(inst, k, variant.params, observer);
            summary.final_best_f = outcome.best_f;
            summary.generations = outcome.generations;
            summary.elapsed = outcome.elapsed;
            summaries.push_back(summary);
        }
    }
    return summaries;
}

} // namespace bandcol
