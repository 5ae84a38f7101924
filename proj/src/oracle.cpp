#include "bandcol/oracle.hpp"

#include "bandcol/driver.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace bandcol {

namespace {

using Domain = std::uint64_t;

Domain color_range(int lo, int hi) {
    if (lo > hi)
        return 0;
    const Domain upto_hi = hi >= 64 ? ~Domain{0} : ((Domain{1} << hi) - 1);
    const Domain below_lo = (Domain{1} << (lo - 1)) - 1;
    return upto_hi & ~below_lo;
}

class Backtracker {
public:
    Backtracker(const BcpInstance& inst, int k, std::int64_t budget)
        : inst_(inst), k_(k), budget_(budget), order_(inst.vertex_count()),
          colors_(inst.vertex_count(), 0) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return inst.degree(a) > inst.degree(b); });
    }

    Feasibility run() {
        std::vector<Domain> domains(inst_.vertex_count(), color_range(1, k_));
        if (!order_.empty())
            domains[order_[0]] = color_range(1, (k_ + 1) / 2);
        const bool found = descend(0, domains);
        if (exhausted_)
            return Feasibility::unknown;
        return found ? Feasibility::feasible : Feasibility::infeasible;
    }

    Coloring witness() const { return Coloring(colors_, k_); }
    std::int64_t nodes() const noexcept { return nodes_; }

private:
    bool descend(std::size_t depth, const std::vector<Domain>& domains) {
        if (depth == order_.size())
            return true;
        const int v = order_[depth];
        for (int c = 1; c <= k_; ++c) {
            if (!(domains[v] >> (c - 1) & 1))
                continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            std::vector<Domain> next = domains;
            bool wiped = false;
            for (const Neighbor& nb : inst_.neighbors(v)) {
                if (colors_[nb.vertex] != 0)
                    continue;
                next[nb.vertex] &= ~color_range(std::max(1, c - nb.d + 1), std::min(k_, c + nb.d - 1));
                if (next[nb.vertex] == 0) {
                    wiped = true;
                    break;
                }
            }
            if (wiped)
                continue;
            colors_[v] = c;
            if (descend(depth + 1, next))
                return true;
            colors_[v] = 0;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const BcpInstance& inst_;
    int k_;
    std::int64_t budget_;
    std::vector<int> order_;
    std::vector<int> colors_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
};

void check_limits(const BcpInstance& inst, int k, const OracleLimits& limits) {
    if (inst.vertex_count() > limits.max_vertices)
        throw OracleLimitError("instance has " + std::to_string(inst.vertex_count()) +
                               " vertices; the exact solver accepts at most " +
                               std::to_string(limits.max_vertices));
    if (k > limits.max_k || k > 64)
        throw OracleLimitError("k = " + std::to_string(k) + " exceeds the exact solver limit of " +
                               std::to_string(std::min(limits.max_k, 64)));
}

} // namespace

FeasibilityResult exact_feasible(const BcpInstance& inst, int k, const OracleLimits& limits) {
    check_limits(inst, k, limits);
    FeasibilityResult result;
    if (k < 1) {
        result.status = Feasibility::infeasible;
        return result;
    }
    Backtracker search(inst, k, limits.node_budget);
    result.status = search.run();
    result.nodes = search.nodes();
    if (result.status == Feasibility::feasible)
        result.witness = search.witness();
    return result;
}

MinKResult exact_min_k(const BcpInstance& inst, const OracleLimits& limits) {
    check_limits(inst, 1, limits);
    MinKResult result;
    for (int k = trivial_lower_bound(inst); k <= limits.max_k; ++k) {
        FeasibilityResult r = exact_feasible(inst, k, limits);
        result.nodes += r.nodes;
        if (r.status == Feasibility::unknown)
            return result;
        if (r.status == Feasibility::feasible) {
            result.k = k;
            result.witness = std::move(r.witness);
            return result;
        }
    }
    throw OracleLimitError("no feasible k up to " + std::to_string(limits.max_k));
}

} // namespace bandcol
