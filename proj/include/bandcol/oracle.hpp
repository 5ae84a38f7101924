#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/instance.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace bandcol {

struct OracleLimits {
    int max_vertices = 12;
    int max_k = 30;
    std::int64_t node_budget = 50'000'000;
};

/// Instance or k beyond OracleLimits.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Feasibility { feasible, infeasible, unknown };

struct FeasibilityResult {
    Feasibility status = Feasibility::unknown;
    std::optional<Coloring> witness;
    std::int64_t nodes = 0;
};

/// Complete backtracking for k-BCP. Vertices are branched in decreasing
/// degree order and colors ascending; every assignment removes the colors
/// within d of it from each uncolored neighbor's domain, and a branch dies as
/// soon as a domain empties. The first vertex only tries 1..ceil(k/2), which
/// is safe because c -> k + 1 - c maps legal colorings to legal colorings.
/// Returns `unknown` when the node budget runs out.
FeasibilityResult exact_feasible(const BcpInstance& inst, int k, const OracleLimits& limits = {});

struct MinKResult {
    std::optional<int> k;  // empty if a feasibility check came back unknown
    std::optional<Coloring> witness;
    std::int64_t nodes = 0;
};

/// Smallest feasible k, searched upward from the trivial lower bound.
MinKResult exact_min_k(const BcpInstance& inst, const OracleLimits& limits = {});

} // namespace bandcol
