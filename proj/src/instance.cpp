#include "bandcol/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bandcol {

namespace {

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + std::to_string(e.d) + ")";
}

} // namespace

BcpInstance build_bcp_instance(int n, std::span<const Edge> raw_edges) {
    if (n < 1)
        throw InstanceError("vertex count must be positive, got " + std::to_string(n));

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const Edge& e : raw_edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw InstanceError("edge " + edge_text(e) + " has a vertex id outside 1.." +
                                std::to_string(n));
        if (e.u == e.v)
            throw InstanceError("self-loop on vertex " + std::to_string(e.u));
        if (e.d < 1)
            throw InstanceError("edge " + edge_text(e) + " has separation below 1");
        edges.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.d});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.d) < std::tie(b.u, b.v, b.d);
    });

    BcpInstance inst;
    inst.n_ = n;
    for (const Edge& e : edges) {
        if (!inst.edges_.empty() && inst.edges_.back().u == e.u && inst.edges_.back().v == e.v) {
            if (inst.edges_.back().d != e.d)
                throw InstanceError("pair (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                    ") listed with conflicting separations " +
                                    std::to_string(inst.edges_.back().d) + " and " +
                                    std::to_string(e.d));
            continue;
        }
        inst.edges_.push_back(e);
    }

    std::vector<int> degree(n, 0);
    for (const Edge& e : inst.edges_) {
        ++degree[e.u - 1];
        ++degree[e.v - 1];
    }
    inst.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        inst.offsets_[v + 1] = inst.offsets_[v] + degree[v];
    inst.adj_.resize(inst.offsets_[n]);
    inst.weighted_degree_.assign(n, 0);
    std::vector<int> fill(inst.offsets_.begin(), inst.offsets_.end() - 1);
    for (const Edge& e : inst.edges_) {
        inst.adj_[fill[e.u - 1]++] = {e.v - 1, e.d};
        inst.adj_[fill[e.v - 1]++] = {e.u - 1, e.d};
        inst.weighted_degree_[e.u - 1] += e.d;
        inst.weighted_degree_[e.v - 1] += e.d;
        inst.max_d_ = std::max(inst.max_d_, e.d);
        inst.total_d_ += e.d;
    }
    // Conflict rows in the evaluation state hold sums of d over a vertex's
    // neighbors in 32-bit cells.
    for (int v = 0; v < n; ++v) {
        if (inst.weighted_degree_[v] > std::numeric_limits<std::int32_t>::max())
            throw InstanceError("weighted degree of vertex " + std::to_string(v + 1) +
                                " exceeds the supported range");
    }
    return inst;
}

std::int64_t BmcpInstance::total_demand() const noexcept {
    return std::accumulate(demand_.begin(), demand_.end(), std::int64_t{0});
}

BmcpInstance build_bmcp_instance(std::vector<int> demand, std::vector<int> self_d,
                                 std::span<const Edge> raw_edges) {
    if (demand.size() != self_d.size())
        throw InstanceError("demand and self-separation arrays differ in length");
    const int n = static_cast<int>(demand.size());
    BmcpInstance inst;
    inst.graph_ = build_bcp_instance(n, raw_edges);
    for (int v = 0; v < n; ++v) {
        if (demand[v] < 1)
            throw InstanceError("vertex " + std::to_string(v + 1) + " has demand " +
                                std::to_string(demand[v]) + " below 1");
        if (self_d[v] < 0)
            throw InstanceError("vertex " + std::to_string(v + 1) +
                                " has a negative self-separation");
        if (demand[v] > 1 && self_d[v] < 1) {
            inst.warnings_.push_back("vertex " + std::to_string(v + 1) + " has demand " +
                                     std::to_string(demand[v]) +
                                     " but self-separation 0; using 1");
            self_d[v] = 1;
        }
    }
    inst.demand_ = std::move(demand);
    inst.self_d_ = std::move(self_d);
    return inst;
}

VertexMap::VertexMap(std::span<const int> demands) {
    first_.assign(demands.size() + 1, 0);
    for (std::size_t v = 0; v < demands.size(); ++v)
        first_[v + 1] = first_[v] + demands[v];
    owner_.resize(first_.back());
    for (std::size_t v = 0; v < demands.size(); ++v)
        std::fill(owner_.begin() + first_[v], owner_.begin() + first_[v + 1], static_cast<int>(v));
}

SplitInstance bmcp_to_bcp(const BmcpInstance& inst, std::int64_t max_vertices) {
    const std::int64_t total = inst.total_demand();
    if (total > max_vertices || total > std::numeric_limits<int>::max())
        throw InstanceError("split instance would have " + std::to_string(total) +
                            " vertices, above the limit of " + std::to_string(max_vertices));

    VertexMap map(inst.demands());
    std::vector<Edge> edges;
    for (int v = 0; v < inst.vertex_count(); ++v) {
        const auto [lo, hi] = map.range(v);
        for (int a = lo; a < hi; ++a)
            for (int b = a + 1; b < hi; ++b)
                edges.push_back({a + 1, b + 1, inst.self_separation(v)});
    }
    for (const Edge& e : inst.graph().edges()) {
        const auto [ilo, ihi] = map.range(e.u - 1);
        const auto [jlo, jhi] = map.range(e.v - 1);
        for (int a = ilo; a < ihi; ++a)
            for (int b = jlo; b < jhi; ++b)
                edges.push_back({a + 1, b + 1, e.d});
    }
    return {build_bcp_instance(static_cast<int>(total), edges), std::move(map)};
}

MultiAssignment map_back(const VertexMap& map, const Coloring& coloring) {
    MultiAssignment out(map.original_count());
    for (int v = 0; v < map.original_count(); ++v) {
        const auto [lo, hi] = map.range(v);
        auto& colors = out[v];
        for (int s = lo; s < hi; ++s)
            colors.push_back(coloring[s]);
        std::sort(colors.begin(), colors.end());
    }
    return out;
}

std::int64_t bmcp_violations(const BmcpInstance& inst, const MultiAssignment& assignment, int k) {
    if (static_cast<int>(assignment.size()) != inst.vertex_count())
        return std::numeric_limits<std::int64_t>::max();
    std::int64_t bad = 0;
    for (int v = 0; v < inst.vertex_count(); ++v) {
        const auto& colors = assignment[v];
        if (static_cast<int>(colors.size()) != inst.demand(v))
            ++bad;
        for (int c : colors)
            bad += (c < 1 || c > k);
        for (std::size_t a = 0; a < colors.size(); ++a)
            for (std::size_t b = a + 1; b < colors.size(); ++b)
                bad += std::abs(colors[a] - colors[b]) < std::max(1, inst.self_separation(v));
    }
    for (const Edge& e : inst.graph().edges())
        for (int a : assignment[e.u - 1])
            for (int b : assignment[e.v - 1])
                bad += std::abs(a - b) < e.d;
    return bad;
}

} // namespace bandcol
