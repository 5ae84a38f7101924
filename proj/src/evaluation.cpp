#include "bandcol/evaluation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bandcol {

std::int64_t evaluate_direct(const BcpInstance& inst, const Coloring& s) {
    if (static_cast<int>(s.size()) != inst.vertex_count())
        throw std::invalid_argument("coloring has " + std::to_string(s.size()) +
                                    " entries for an instance with " +
                                    std::to_string(inst.vertex_count()) + " vertices");
    std::int64_t f = 0;
    for (const Edge& e : inst.edges())
        f += std::max(0, e.d - std::abs(s[e.u - 1] - s[e.v - 1]));
    return f;
}

std::size_t hamming_distance(const Coloring& a, const Coloring& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("colorings differ in length");
    std::size_t dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dist += a[i] != b[i];
    return dist;
}

EvalState::EvalState(const BcpInstance& inst, Coloring s) : inst_(&inst), coloring_(std::move(s)) {
    const int n = inst.vertex_count();
    if (static_cast<int>(coloring_.size()) != n)
        throw std::invalid_argument("coloring length does not match the instance");
    q_ = rebuilt_matrix();
    position_.assign(n, -1);
    std::int64_t twice = 0;
    for (int v = 0; v < n; ++v) {
        twice += q_[index(v, coloring_[v])];
        refresh_membership(v);
    }
    f_ = twice / 2;
}

std::vector<std::int32_t> EvalState::rebuilt_matrix() const {
    const int n = inst_->vertex_count();
    const int k = coloring_.k();
    std::vector<std::int32_t> q(static_cast<std::size_t>(n) * k, 0);
    for (int v = 0; v < n; ++v) {
        std::int32_t* row = q.data() + static_cast<std::size_t>(v) * k;
        for (const Neighbor& nb : inst_->neighbors(v)) {
            const int center = coloring_[nb.vertex];
            const int lo = std::max(1, center - nb.d + 1);
            const int hi = std::min(k, center + nb.d - 1);
            for (int c = lo; c <= hi; ++c)
                row[c - 1] += nb.d - std::abs(c - center);
        }
    }
    return q;
}

std::int64_t EvalState::move_delta(int u, int c) const {
    if (c < 1 || c > coloring_.k())
        throw std::out_of_range("color " + std::to_string(c) + " outside 1.." +
                                std::to_string(coloring_.k()));
    return delta_unchecked(u, c);
}

void EvalState::add_contribution(int v, int center, int d, int sign) noexcept {
    const int k = coloring_.k();
    std::int32_t* row = q_.data() + static_cast<std::size_t>(v) * k;
    const int lo = std::max(1, center - d + 1);
    const int hi = std::min(k, center + d - 1);
    for (int c = lo; c <= hi; ++c)
        row[c - 1] += sign * (d - std::abs(c - center));
}

void EvalState::refresh_membership(int v) noexcept {
    const bool conflicting = q_[index(v, coloring_[v])] > 0;
    if (conflicting && position_[v] < 0) {
        position_[v] = static_cast<int>(conflicting_.size());
        conflicting_.push_back(v);
    } else if (!conflicting && position_[v] >= 0) {
        const int last = conflicting_.back();
        conflicting_[position_[v]] = last;
        position_[last] = position_[v];
        conflicting_.pop_back();
        position_[v] = -1;
    }
}

void EvalState::apply_move(int u, int c) {
    if (c < 1 || c > coloring_.k())
        throw std::out_of_range("color " + std::to_string(c) + " outside 1.." +
                                std::to_string(coloring_.k()));
    const int old = coloring_[u];
    if (old == c)
        return;
    f_ += delta_unchecked(u, c);
    coloring_.set(u, c);
    for (const Neighbor& nb : inst_->neighbors(u)) {
        add_contribution(nb.vertex, old, nb.d, -1);
        add_contribution(nb.vertex, c, nb.d, +1);
        refresh_membership(nb.vertex);
    }
    refresh_membership(u);
}

} // namespace bandcol
