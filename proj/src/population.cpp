#include "bandcol/population.hpp"

#include "bandcol/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bandcol {

MemberId Population::add(Coloring coloring, std::int64_t f) {
    const MemberId id = next_id_++;
    members_.push_back({std::move(coloring), f, id});
    return id;
}

MemberId Population::replace(std::size_t index, Coloring coloring, std::int64_t f) {
    const MemberId id = next_id_++;
    members_.at(index) = {std::move(coloring), f, id};
    return id;
}

std::size_t Population::worst_index() const {
    if (members_.empty())
        throw std::logic_error("empty population");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < members_.size(); ++i)
        if (members_[i].f > members_[worst].f)
            worst = i;
    return worst;
}

std::size_t Population::best_index() const {
    if (members_.empty())
        throw std::logic_error("empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < members_.size(); ++i)
        if (members_[i].f < members_[best].f)
            best = i;
    return best;
}

double Population::mean_f() const {
    if (members_.empty())
        return 0.0;
    double sum = 0.0;
    for (const Member& m : members_)
        sum += static_cast<double>(m.f);
    return sum / static_cast<double>(members_.size());
}

std::optional<std::size_t> Population::find(MemberId id) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].id == id)
            return i;
    return std::nullopt;
}

PairSet PairSet::all_pairs(const Population& pop) {
    PairSet set;
    const auto& m = pop.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            set.add(m[i].id, m[j].id);
    return set;
}

bool PairSet::contains(MemberId a, MemberId b) const {
    if (a > b)
        std::swap(a, b);
    return std::find(pairs_.begin(), pairs_.end(), std::pair{a, b}) != pairs_.end();
}

void PairSet::add(MemberId a, MemberId b) {
    if (a == b || contains(a, b))
        return;
    pairs_.emplace_back(std::min(a, b), std::max(a, b));
}

void PairSet::remove_member(MemberId id) {
    std::erase_if(pairs_, [id](const auto& pr) { return pr.first == id || pr.second == id; });
}

std::pair<MemberId, MemberId> PairSet::pick(Rng& rng) {
    if (pairs_.empty())
        throw std::logic_error("no pair left to pick");
    const std::size_t i = rng.below(pairs_.size());
    const auto chosen = pairs_[i];
    pairs_[i] = pairs_.back();
    pairs_.pop_back();
    return chosen;
}

Population init_population(const BcpInstance& inst, int k, int p, const TsParams& ts,
                           Rng& construction_rng, Rng& search_rng, InitStats* stats,
                           const Deadline* deadline) {
    if (p < 2)
        throw std::invalid_argument("population size must be at least 2");
    if (k < 1)
        throw std::invalid_argument("color budget must be positive");
    const int n = inst.vertex_count();

    std::vector<TsResult> candidates;
    candidates.reserve(3 * static_cast<std::size_t>(p));
    std::vector<int> colors(n);
    for (int i = 0; i < 3 * p; ++i) {
        for (int& c : colors)
            c = construction_rng.uniform(1, k);
        TsResult improved = tabu_search(inst, Coloring(colors, k), ts, search_rng, deadline);
        if (stats) {
            ++stats->ts_calls;
            stats->ts_iterations += improved.iterations;
        }
        const bool legal = improved.f == 0;
        candidates.push_back(std::move(improved));
        if (legal) {
            if (stats)
                stats->legal_found = true;
            break;
        }
        if (deadline && deadline->expired())
            break;
    }

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return candidates[a].f < candidates[b].f; });

    Population pop;
    for (std::size_t i = 0; i < order.size() && i < static_cast<std::size_t>(p); ++i)
        pop.add(std::move(candidates[order[i]].coloring), candidates[order[i]].f);
    return pop;
}

bool try_insert(Population& pop, PairSet& pairs, const Coloring& candidate, std::int64_t f) {
    if (pop.size() == 0)
        return false;
    const std::size_t worst = pop.worst_index();
    if (!(f < pop[worst].f))
        return false;
    // "too close" means fewer than 0.1 * n differing positions; compare 10 * dist with n exactly.
    const std::size_t n = candidate.size();
    for (const Member& m : pop.members())
        if (10 * hamming_distance(candidate, m.coloring) < n)
            return false;

    pairs.remove_member(pop[worst].id);
    const MemberId id = pop.replace(worst, candidate, f);
    for (const Member& m : pop.members())
        pairs.add(id, m.id);
    return true;
}

Population restart(const BcpInstance& inst, int k, int p, const TsParams& ts, const Coloring& best,
                   std::int64_t best_f, Rng& construction_rng, Rng& search_rng, InitStats* stats,
                   const Deadline* deadline) {
    Population pop = init_population(inst, k, p, ts, construction_rng, search_rng, stats, deadline);
    if (pop.size() < static_cast<std::size_t>(p))
        pop.add(best, best_f);
    else
        pop.replace(pop.worst_index(), best, best_f);
    return pop;
}

} // namespace bandcol
