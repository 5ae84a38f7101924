#include "bandcol/tabu_search.hpp"

#include <cmath>
#include <limits>

namespace bandcol {

namespace {

template <typename Admissible>
std::optional<Move> best_move(const EvalState& state, TabuState& tabu, Rng& rng,
                              Admissible&& admissible) {
    const int k = state.k();
    auto& ties = tabu.ties;
    ties.clear();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const int u : state.conflicting()) {
        const int current = state.color(u);
        const std::int64_t base = state.conflict(u, current);
        for (int c = 1; c <= k; ++c) {
            if (c == current)
                continue;
            const std::int64_t delta = state.conflict(u, c) - base;
            if (delta > best || !admissible(u, c, delta))
                continue;
            if (delta < best) {
                best = delta;
                ties.clear();
            }
            ties.push_back({u, c, delta});
        }
    }
    if (ties.empty())
        return std::nullopt;
    return ties[ties.size() == 1 ? 0 : rng.below(ties.size())];
}

} // namespace

std::optional<Move> select_move(const EvalState& state, TabuState& tabu, Rng& rng) {
    const std::int64_t f = state.objective();
    return best_move(state, tabu, rng, [&](int u, int c, std::int64_t delta) {
        return !tabu.is_tabu(u, c) || f + delta < tabu.best_f;
    });
}

std::optional<Move> select_any_move(const EvalState& state, TabuState& tabu, Rng& rng) {
    return best_move(state, tabu, rng, [](int, int, std::int64_t) { return true; });
}

TsResult tabu_search(const BcpInstance& inst, const Coloring& start, const TsParams& params,
                     Rng& rng, const Deadline* deadline) {
    EvalState state(inst, start);
    TabuState tabu(inst.vertex_count(), start.k());
    tabu.best_f = state.objective();
    tabu.best_coloring = start;
    const bool descent = params.kind == LocalSearchKind::steepest_descent;

    while (state.objective() > 0 && tabu.iteration < params.alpha) {
        if (deadline && (tabu.iteration & 63) == 0 && deadline->expired())
            break;
        std::optional<Move> move;
        if (descent) {
            move = select_any_move(state, tabu, rng);
            if (!move || move->delta >= 0)
                break;
        } else {
            move = select_move(state, tabu, rng);
            if (!move)
                move = select_any_move(state, tabu, rng);
            if (!move)
                break;
        }

        const int old = state.color(move->vertex);
        state.apply_move(move->vertex, move->color);
        if (!descent) {
            std::int64_t tenure =
                params.tenure_base +
                static_cast<std::int64_t>(std::floor(params.tenure_coeff *
                                                     static_cast<double>(state.objective())));
            if (params.tenure_random > 0)
                tenure += static_cast<std::int64_t>(rng.below(params.tenure_random));
            tabu.forbid(move->vertex, old, tenure);
        }
        ++tabu.iteration;

        if (state.objective() < tabu.best_f) {
            tabu.best_f = state.objective();
            tabu.best_coloring = state.coloring();
        }
    }
    return {std::move(tabu.best_coloring), tabu.best_f, tabu.iteration};
}

} // namespace bandcol
