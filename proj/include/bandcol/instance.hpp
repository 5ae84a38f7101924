#pragma once

#include "bandcol/coloring.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bandcol {

/// Raised when an instance or its input violates a structural rule.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge with 1-based endpoints as seen by callers; stored canonical with u < v.
struct Edge {
    int u;
    int v;
    int d;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    int vertex;  // 0-based
    int d;
};

/// Undirected graph with per-edge separation requirements.
///
/// Immutable after construction. External vertex ids are 1..n; internal
/// arrays (adjacency, colorings) are indexed 0..n-1.
class BcpInstance {
public:
    BcpInstance() = default;

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Canonical edge list, 1-based ids, u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbors of 0-based vertex `v`.
    std::span<const Neighbor> neighbors(int v) const noexcept {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(int v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::int64_t weighted_degree(int v) const noexcept { return weighted_degree_[v]; }
    int max_separation() const noexcept { return max_d_; }
    std::int64_t total_separation() const noexcept { return total_d_; }

    friend BcpInstance build_bcp_instance(int n, std::span<const Edge> raw_edges);

private:
    int n_ = 0;
    int max_d_ = 0;
    std::int64_t total_d_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Neighbor> adj_;
    std::vector<std::int64_t> weighted_degree_;
};

/// Validates and canonicalizes an edge list (1-based ids).
///
/// Duplicates with equal d are merged; a duplicate pair with a different d,
/// a self-loop, an out-of-range id or d < 1 throws InstanceError.
BcpInstance build_bcp_instance(int n, std::span<const Edge> raw_edges);

inline BcpInstance build_bcp_instance(int n, std::initializer_list<Edge> raw_edges) {
    return build_bcp_instance(n, std::span<const Edge>(raw_edges.begin(), raw_edges.size()));
}

/// Multicoloring instance: vertex i needs `demand(i)` distinct colors that are
/// pairwise at least `self_separation(i)` apart.
class BmcpInstance {
public:
    BmcpInstance() = default;

    int vertex_count() const noexcept { return static_cast<int>(demand_.size()); }
    int demand(int v) const noexcept { return demand_[v]; }
    int self_separation(int v) const noexcept { return self_d_[v]; }
    const std::vector<int>& demands() const noexcept { return demand_; }
    const std::vector<int>& self_separations() const noexcept { return self_d_; }
    const BcpInstance& graph() const noexcept { return graph_; }
    std::int64_t total_demand() const noexcept;

    /// Non-fatal validation notes, e.g. a missing self-separation that was raised to 1.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    friend BmcpInstance build_bmcp_instance(std::vector<int> demand, std::vector<int> self_d,
                                            std::span<const Edge> raw_edges);

private:
    std::vector<int> demand_;
    std::vector<int> self_d_;
    BcpInstance graph_;
    std::vector<std::string> warnings_;
};

/// `demand` and `self_d` are indexed 0..n-1. A vertex with demand > 1 and
/// self-separation < 1 is accepted with a warning and its self-separation is
/// raised to 1, since its colors must still be distinct.
BmcpInstance build_bmcp_instance(std::vector<int> demand, std::vector<int> self_d,
                                 std::span<const Edge> raw_edges);

/// Maps original BMCP vertices to the contiguous block of split vertices that
/// replaces each of them. All ids here are 0-based.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::span<const int> demands);

    int original_count() const noexcept { return static_cast<int>(first_.size()) - 1; }
    int split_count() const noexcept { return static_cast<int>(owner_.size()); }

    /// Split vertices of original vertex `v`: [first, first + count).
    std::pair<int, int> range(int v) const noexcept { return {first_[v], first_[v + 1]}; }
    int original_of(int split) const noexcept { return owner_[split]; }

private:
    std::vector<int> first_{0};
    std::vector<int> owner_;
};

struct SplitInstance {
    BcpInstance bcp;
    VertexMap map;
};

inline constexpr std::int64_t kDefaultSplitVertexLimit = 1'000'000;

/// Replaces every vertex i by a clique on demand(i) vertices whose internal
/// edges carry d(i,i); every split pair across an original edge (i,j) carries d(i,j).
SplitInstance bmcp_to_bcp(const BmcpInstance& inst,
                          std::int64_t max_vertices = kDefaultSplitVertexLimit);

/// Per original vertex, the colors of its split block, sorted ascending.
using MultiAssignment = std::vector<std::vector<int>>;

MultiAssignment map_back(const VertexMap& map, const Coloring& coloring);

/// Direct BMCP constraint check: counts violated requirements (wrong number of
/// colors, colors outside 1..k, pairs closer than d(i,i) within a vertex, pairs
/// closer than d(i,j) across an edge). Zero means a legal multicoloring.
std::int64_t bmcp_violations(const BmcpInstance& inst, const MultiAssignment& assignment, int k);

} // namespace bandcol
