#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/instance.hpp"
#include "bandcol/path_relinking.hpp"
#include "bandcol/tabu_search.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace bandcol {

struct SolveParams {
    int p = 20;
    std::int64_t alpha = 10'000;
    double xi = 0.35;
    RelinkStrategy strategy = RelinkStrategy::pr1_random;
    /// Seconds per k; <= 0 means no limit.
    double time_limit = 60.0;
    std::uint64_t seed = 1;
    int tenure_base = 0;
    double tenure_coeff = 0.6;
    int tenure_random = 10;
    LocalSearchKind local_search = LocalSearchKind::tabu;
    /// Stop after this many processed pairs; 0 means no cap.
    std::int64_t max_generations = 0;

    TsParams ts_params() const {
        return {alpha, tenure_base, tenure_coeff, tenure_random, local_search};
    }
};

enum class SolveStatus { legal_found, timeout };

struct SolveOutcome {
    SolveStatus status = SolveStatus::timeout;
    Coloring best_coloring;
    std::int64_t best_f = 0;
    double elapsed = 0.0;
    std::int64_t generations = 0;
    std::int64_t ts_calls = 0;
    std::int64_t ts_iterations = 0;
    std::int64_t relink_calls = 0;
    std::int64_t restarts = 0;
};

enum class SampleKind {
    population,  // after (re)initialization
    generation,  // after a pair has been processed
    offspring,   // after an offspring has been improved and offered to the population
};

struct ProgressSample {
    SampleKind kind;
    double elapsed;
    std::int64_t generation;
    std::int64_t ts_calls;
    std::int64_t best_f;
    double mean_f;
    /// Objective of the relinked reference before local search (offspring samples only).
    std::int64_t offspring_f = -1;
};

using ProgressObserver = std::function<void(const ProgressSample&)>;

/// Named random streams of one run, derived from SolveParams::seed.
enum class Stream : std::uint64_t { construction = 1, local_search = 2, relinking = 3 };

/// Population path relinking for a fixed color budget k. Stops at f = 0, at
/// the time limit, or after max_generations processed pairs.
SolveOutcome solve_k(const BcpInstance& inst, int k, const SolveParams& params,
                     const ProgressObserver& observer = {});

/// Greedy legal coloring: vertices in decreasing weighted degree (ties by
/// id), each taking the smallest color compatible with colored neighbors.
Coloring greedy_coloring(const BcpInstance& inst);
int initial_upper_bound(const BcpInstance& inst);

/// 1 + max d over edges, or 1 without edges.
int trivial_lower_bound(const BcpInstance& inst);

struct KAttempt {
    int k;
    SolveOutcome outcome;
};

struct MinimizeResult {
    std::optional<int> best_k;
    std::optional<Coloring> best_coloring;
    std::vector<KAttempt> attempts;
};

/// Solves k-BCP for decreasing k until a budget runs out without a legal
/// coloring or k reaches the trivial lower bound. Without `k_start`, the
/// greedy upper bound is taken as already solved and the descent starts one
/// below it. The run for budget k uses seed derive_seed(params.seed, k).
MinimizeResult minimize_k(const BcpInstance& inst, const SolveParams& params,
                          std::optional<int> k_start = std::nullopt);

} // namespace bandcol
