#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/deadline.hpp"
#include "bandcol/evaluation.hpp"
#include "bandcol/instance.hpp"
#include "bandcol/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bandcol {

enum class LocalSearchKind {
    tabu,
    /// Best-improvement descent: tabu list off, only strictly improving moves,
    /// stops at the first local optimum.
    steepest_descent,
};

struct TsParams {
    /// Maximum number of moves per call.
    std::int64_t alpha = 10'000;
    /// tl = tenure_base + floor(tenure_coeff * f) + uniform{0 .. tenure_random - 1}
    int tenure_base = 0;
    double tenure_coeff = 0.6;
    int tenure_random = 10;
    LocalSearchKind kind = LocalSearchKind::tabu;
};

struct Move {
    int vertex;  // 0-based
    int color;
    std::int64_t delta;
};

/// Tabu list and per-call bookkeeping.
struct TabuState {
    TabuState(int n, int k)
        : k(k), tabu_until(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0) {}

    bool is_tabu(int v, int c) const noexcept { return tabu_until[slot(v, c)] > iteration; }
    /// Forbid giving color `c` back to `v` during the next `tenure` iterations.
    void forbid(int v, int c, std::int64_t tenure) noexcept {
        tabu_until[slot(v, c)] = iteration + 1 + tenure;
    }
    std::size_t slot(int v, int c) const noexcept {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k) +
               static_cast<std::size_t>(c - 1);
    }

    int k;
    std::vector<std::int64_t> tabu_until;
    std::int64_t iteration = 0;
    std::int64_t best_f = 0;
    Coloring best_coloring;
    std::vector<Move> ties;  // scratch
};

/// Best admissible critical one-move: over conflicting vertices u and colors
/// c != c_u, the minimum-delta move that is either not tabu or would bring f
/// strictly below tabu.best_f. Ties are broken uniformly at random.
/// Returns nullopt when the conflicting set is empty or every move is tabu
/// without aspiration.
std::optional<Move> select_move(const EvalState& state, TabuState& tabu, Rng& rng);

/// Minimum-delta critical one-move ignoring tabu status; ties uniform.
std::optional<Move> select_any_move(const EvalState& state, TabuState& tabu, Rng& rng);

struct TsResult {
    Coloring coloring;
    std::int64_t f = 0;
    std::int64_t iterations = 0;
};

/// Improves `start` over the critical one-move neighborhood and returns the
/// best coloring seen. Stops after params.alpha moves, at f = 0, or when
/// `deadline` expires.
TsResult tabu_search(const BcpInstance& inst, const Coloring& start, const TsParams& params,
                     Rng& rng, const Deadline* deadline = nullptr);

} // namespace bandcol
