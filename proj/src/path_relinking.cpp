#include "bandcol/path_relinking.hpp"

#include "bandcol/evaluation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace bandcol {

std::string_view to_string(RelinkStrategy s) noexcept {
    return s == RelinkStrategy::pr1_random ? "PR1" : "PR2";
}

std::size_t candidate_margin(std::size_t nc_size, double xi) {
    // xi * |NC| can land a rounding error above an integer (e.g. 0.35 * 40).
    const double scaled = xi * static_cast<double>(nc_size);
    return static_cast<std::size_t>(std::max(0.0, std::ceil(scaled - 1e-9)));
}

RelinkResult relink(const BcpInstance& inst, const Coloring& from, const Coloring& to,
                    RelinkStrategy strategy, double xi, Rng& rng) {
    if (from.size() != to.size() || from.k() != to.k())
        throw std::invalid_argument("relinking endpoints differ in length or color budget");
    if (!(xi > 0.0 && xi < 1.0))
        throw std::invalid_argument("distance parameter must lie in (0, 1)");

    std::vector<int> remaining;
    for (std::size_t l = 0; l < from.size(); ++l)
        if (from[l] != to[l])
            remaining.push_back(static_cast<int>(l));

    RelinkResult result;
    PathTrace& trace = result.trace;
    trace.nc_size = remaining.size();
    if (trace.nc_size <= 1) {
        trace.initial_f = evaluate_direct(inst, from);
        return result;
    }

    EvalState state(inst, from);
    trace.initial_f = state.objective();
    const std::size_t r = trace.nc_size - 1;
    trace.steps.reserve(r);
    std::vector<std::size_t> ties;

    for (std::size_t m = 1; m <= r; ++m) {
        std::size_t pick = 0;
        if (strategy == RelinkStrategy::pr1_random) {
            pick = rng.below(remaining.size());
        } else {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            ties.clear();
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                const int t = remaining[i];
                const std::int64_t delta = state.delta_unchecked(t, to[t]);
                if (delta < best) {
                    best = delta;
                    ties.clear();
                }
                if (delta == best)
                    ties.push_back(i);
            }
            pick = ties[ties.size() == 1 ? 0 : rng.below(ties.size())];
        }
        const int t = remaining[pick];
        remaining[pick] = remaining.back();
        remaining.pop_back();

        const std::int64_t delta = state.delta_unchecked(t, to[t]);
        state.apply_move(t, to[t]);
        trace.steps.push_back({m, t, delta, state.objective()});
    }

    const std::size_t margin = candidate_margin(trace.nc_size, xi);
    auto best_in = [&](std::size_t lo, std::size_t hi) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t m = std::max<std::size_t>(lo, 1); m <= hi && m <= r; ++m)
            if (!best || trace.steps[m - 1].f < trace.steps[*best - 1].f)
                best = m;
        return best;
    };
    if (margin <= trace.nc_size - margin)
        trace.selected = best_in(margin, trace.nc_size - margin);
    if (!trace.selected && r > 1)
        trace.selected = best_in(1, r - 1);
    if (trace.selected)
        result.reference = path_solution(trace, from, to, *trace.selected);
    return result;
}

Coloring path_solution(const PathTrace& trace, const Coloring& from, const Coloring& to,
                       std::size_t m) {
    Coloring s = from;
    for (std::size_t i = 0; i < m && i < trace.steps.size(); ++i) {
        const int t = trace.steps[i].vertex;
        s.set(t, to[t]);
    }
    return s;
}

bool path_deltas_consistent(const PathTrace& trace, const BcpInstance& inst, const Coloring& from,
                            const Coloring& to) {
    if (from.size() != to.size())
        return false;
    Coloring s = from;
    std::int64_t prev = evaluate_direct(inst, s);
    if (prev != trace.initial_f)
        return false;
    std::unordered_set<int> used;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const PathStep& step = trace.steps[i];
        const int t = step.vertex;
        if (step.m != i + 1 || t < 0 || static_cast<std::size_t>(t) >= s.size())
            return false;
        if (from[t] == to[t] || !used.insert(t).second)
            return false;
        s.set(t, to[t]);
        const std::int64_t f = evaluate_direct(inst, s);
        if (step.f != f || step.f != prev + step.delta)
            return false;
        prev = f;
    }
    return true;
}

void write_path_trace(std::ostream& out, const PathTrace& trace) {
    out << "m,t,delta,f\n";
    out << 0 << ",," << 0 << ',' << trace.initial_f << '\n';
    for (const PathStep& step : trace.steps)
        out << step.m << ',' << step.vertex + 1 << ',' << step.delta << ',' << step.f << '\n';
}

} // namespace bandcol
