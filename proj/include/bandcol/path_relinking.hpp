#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/instance.hpp"
#include "bandcol/rng.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace bandcol {

enum class RelinkStrategy {
    pr1_random,  // next index drawn uniformly from the remaining differing positions
    pr2_greedy,  // next index is one with the smallest objective change, ties random
};

std::string_view to_string(RelinkStrategy s) noexcept;

struct PathStep {
    std::size_t m;      // step number, 1..r
    int vertex;         // 0-based index changed at this step
    std::int64_t delta;
    std::int64_t f;     // objective of s(m)
};

/// Record of one path s(0) .. s(r) with r = |NC| - 1.
struct PathTrace {
    std::size_t nc_size = 0;
    std::int64_t initial_f = 0;
    std::vector<PathStep> steps;
    std::optional<std::size_t> selected;  // chosen m
};

struct RelinkResult {
    std::optional<Coloring> reference;
    PathTrace trace;
};

/// Smallest m admitted to the candidate list: ceil(xi * |NC|).
std::size_t candidate_margin(std::size_t nc_size, double xi);

/// Walks from `from` toward `to`, setting one more differing position to its
/// value in `to` per step, and picks the best path solution that stays at
/// least ceil(xi * |NC|) positions away from both endpoints (ties: smallest m).
/// When no step satisfies the distance rule, the best of s(1) .. s(r-1) is
/// used; with r <= 1 in that case, or |NC| <= 1, there is no reference.
RelinkResult relink(const BcpInstance& inst, const Coloring& from, const Coloring& to,
                    RelinkStrategy strategy, double xi, Rng& rng);

/// Replays the trace from `from` and checks every recorded step: the changed
/// index is a fresh differing position, f(s(m)) = f(s(m-1)) + delta, and f(s(m))
/// matches a direct evaluation of the reconstructed coloring.
bool path_deltas_consistent(const PathTrace& trace, const BcpInstance& inst, const Coloring& from,
                            const Coloring& to);

/// Reconstructs s(m) from the first m recorded steps.
Coloring path_solution(const PathTrace& trace, const Coloring& from, const Coloring& to,
                       std::size_t m);

/// Writes "m,t,delta,f" rows (t is 1-based) for plotting.
void write_path_trace(std::ostream& out, const PathTrace& trace);

} // namespace bandcol
