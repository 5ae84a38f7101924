#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/instance.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bandcol {

/// Sum over edges of max(0, d(i,j) - |c_i - c_j|). Reference implementation,
/// no incremental state. Throws std::invalid_argument on a length mismatch.
std::int64_t evaluate_direct(const BcpInstance& inst, const Coloring& s);

/// Number of positions where the two colorings differ.
std::size_t hamming_distance(const Coloring& a, const Coloring& b);

/// A coloring together with its conflict matrix.
///
/// conflict(v, c) = sum over neighbors u of v of max(0, d(v,u) - |c - c_u|),
/// i.e. the violation vertex v would carry if it took color c. With that
/// matrix a one-vertex recoloring is priced in O(1):
///   delta(u -> c) = conflict(u, c) - conflict(u, c_u).
/// The conflicting-vertex set holds exactly the v with conflict(v, c_v) > 0.
class EvalState {
public:
    EvalState(const BcpInstance& inst, Coloring s);
    /// The state keeps a reference to the instance.
    EvalState(BcpInstance&&, Coloring) = delete;

    const BcpInstance& instance() const noexcept { return *inst_; }
    const Coloring& coloring() const noexcept { return coloring_; }
    int k() const noexcept { return coloring_.k(); }
    int color(int v) const noexcept { return coloring_[v]; }
    std::int64_t objective() const noexcept { return f_; }

    /// 0-based vertex, color in 1..k.
    std::int32_t conflict(int v, int c) const noexcept { return q_[index(v, c)]; }

    std::span<const int> conflicting() const noexcept { return conflicting_; }
    bool is_conflicting(int v) const noexcept { return position_[v] >= 0; }

    /// Objective change of recoloring `u` to `c`. Throws std::out_of_range for c outside 1..k.
    std::int64_t move_delta(int u, int c) const;

    /// Same as move_delta without the range check.
    std::int64_t delta_unchecked(int u, int c) const noexcept {
        return std::int64_t{q_[index(u, c)]} - q_[index(u, coloring_[u])];
    }

    /// Recolors `u` to `c`, updating the objective, the conflicting set and the
    /// conflict rows of u's neighbors. Throws std::out_of_range for c outside 1..k.
    void apply_move(int u, int c);

    /// Full recomputation of the matrix, used as a consistency check.
    std::vector<std::int32_t> rebuilt_matrix() const;
    const std::vector<std::int32_t>& matrix() const noexcept { return q_; }

private:
    std::size_t index(int v, int c) const noexcept {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(coloring_.k()) +
               static_cast<std::size_t>(c - 1);
    }
    void add_contribution(int v, int center, int d, int sign) noexcept;
    void refresh_membership(int v) noexcept;

    const BcpInstance* inst_;
    Coloring coloring_;
    std::vector<std::int32_t> q_;
    std::int64_t f_ = 0;
    std::vector<int> conflicting_;
    std::vector<int> position_;
};

inline EvalState build_eval_state(const BcpInstance& inst, Coloring s) {
    return EvalState(inst, std::move(s));
}

} // namespace bandcol
