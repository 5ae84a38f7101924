#include "bandcol/driver.hpp"

#include "bandcol/deadline.hpp"
#include "bandcol/evaluation.hpp"
#include "bandcol/population.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bandcol {

SolveOutcome solve_k(const BcpInstance& inst, int k, const SolveParams& params,
                     const ProgressObserver& observer) {
    if (k < 1)
        throw std::invalid_argument("color budget must be positive");
    const Deadline deadline(params.time_limit);
    Rng construction(derive_seed(params.seed, static_cast<std::uint64_t>(Stream::construction)));
    Rng search(derive_seed(params.seed, static_cast<std::uint64_t>(Stream::local_search)));
    Rng relinker(derive_seed(params.seed, static_cast<std::uint64_t>(Stream::relinking)));
    const TsParams ts = params.ts_params();

    SolveOutcome out;
    Coloring best;
    std::int64_t best_f = std::numeric_limits<std::int64_t>::max();
    auto improve = [&](const Coloring& s, std::int64_t f) {
        if (f < best_f) {
            best = s;
            best_f = f;
        }
    };
    auto sample = [&](SampleKind kind, const Population& pop, std::int64_t offspring_f) {
        if (observer)
            observer({kind, deadline.elapsed(), out.generations, out.ts_calls, best_f, pop.mean_f(),
                      offspring_f});
    };
    auto stop = [&] {
        return best_f == 0 || deadline.expired() ||
               (params.max_generations > 0 && out.generations >= params.max_generations);
    };

    bool first_round = true;
    while (true) {
        InitStats stats;
        Population pop =
            first_round ? init_population(inst, k, params.p, ts, construction, search, &stats,
                                          &deadline)
                        : restart(inst, k, params.p, ts, best, best_f, construction, search,
                                  &stats, &deadline);
        if (!first_round)
            ++out.restarts;
        first_round = false;
        out.ts_calls += stats.ts_calls;
        out.ts_iterations += stats.ts_iterations;
        const Member& top = pop[pop.best_index()];
        improve(top.coloring, top.f);
        sample(SampleKind::population, pop, -1);
        if (stop())
            break;

        PairSet pairs = PairSet::all_pairs(pop);
        while (!pairs.empty() && !stop()) {
            const auto [a, b] = pairs.pick(relinker);
            const Coloring si = pop[*pop.find(a)].coloring;
            const Coloring sj = pop[*pop.find(b)].coloring;
            // Both paths come from the parents as they were when the pair was drawn.
            RelinkResult forward = relink(inst, si, sj, params.strategy, params.xi, relinker);
            RelinkResult backward = relink(inst, sj, si, params.strategy, params.xi, relinker);
            out.relink_calls += 2;

            for (RelinkResult* offspring : {&forward, &backward}) {
                if (!offspring->reference || best_f == 0)
                    continue;
                const std::int64_t relinked_f =
                    offspring->trace.steps[*offspring->trace.selected - 1].f;
                TsResult improved = tabu_search(inst, *offspring->reference, ts, search, &deadline);
                ++out.ts_calls;
                out.ts_iterations += improved.iterations;
                improve(improved.coloring, improved.f);
                try_insert(pop, pairs, improved.coloring, improved.f);
                sample(SampleKind::offspring, pop, relinked_f);
            }
            ++out.generations;
            sample(SampleKind::generation, pop, -1);
        }
        if (stop())
            break;
    }

    out.best_coloring = std::move(best);
    out.best_f = best_f;
    out.status = best_f == 0 ? SolveStatus::legal_found : SolveStatus::timeout;
    out.elapsed = deadline.elapsed();
    return out;
}

Coloring greedy_coloring(const BcpInstance& inst) {
    const int n = inst.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.weighted_degree(a) > inst.weighted_degree(b);
    });
    std::vector<int> colors(n, 0);
    int k = 1;
    for (const int v : order) {
        int c = 1;
        for (bool moved = true; moved;) {
            moved = false;
            for (const Neighbor& nb : inst.neighbors(v)) {
                const int other = colors[nb.vertex];
                if (other != 0 && std::abs(c - other) < nb.d) {
                    c = other + nb.d;
                    moved = true;
                }
            }
        }
        colors[v] = c;
        k = std::max(k, c);
    }
    return Coloring(std::move(colors), k);
}

int initial_upper_bound(const BcpInstance& inst) { return greedy_coloring(inst).k(); }

int trivial_lower_bound(const BcpInstance& inst) {
    return inst.edge_count() > 0 ? 1 + inst.max_separation() : 1;
}

MinimizeResult minimize_k(const BcpInstance& inst, const SolveParams& params,
                          std::optional<int> k_start) {
    MinimizeResult result;
    int k = 0;
    if (k_start) {
        k = *k_start;
    } else {
        Coloring greedy = greedy_coloring(inst);
        k = greedy.k() - 1;
        result.best_k = greedy.k();
        result.best_coloring = std::move(greedy);
    }
    for (const int floor = trivial_lower_bound(inst); k >= floor; --k) {
        SolveParams per_k = params;
        per_k.seed = derive_seed(params.seed, static_cast<std::uint64_t>(k));
        SolveOutcome outcome = solve_k(inst, k, per_k);
        const bool legal = outcome.status == SolveStatus::legal_found &&
                           evaluate_direct(inst, outcome.best_coloring) == 0;
        if (legal) {
            result.best_k = k;
            result.best_coloring = outcome.best_coloring;
        }
        result.attempts.push_back({k, std::move(outcome)});
        if (!legal)
            break;
    }
    return result;
}

} // namespace bandcol
