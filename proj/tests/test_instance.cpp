#include "bandcol/evaluation.hpp"
#include "bandcol/instance.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace bandcol;

TEST_CASE("build_bcp_instance keeps the given edges") {
    const BcpInstance inst = build_bcp_instance(3, {{1, 2, 3}, {2, 3, 2}});
    CHECK(inst.vertex_count() == 3);
    CHECK(inst.edge_count() == 2);
    CHECK(inst.max_separation() == 3);
    CHECK(inst.total_separation() == 5);
    CHECK(inst.degree(1) == 2);
    CHECK(inst.weighted_degree(1) == 5);
}

TEST_CASE("edges are stored with u < v") {
    const BcpInstance inst = build_bcp_instance(3, {{2, 1, 3}});
    REQUIRE(inst.edge_count() == 1);
    CHECK(inst.edges()[0] == Edge{1, 2, 3});
}

TEST_CASE("invalid edge lists are rejected") {
    CHECK_THROWS_AS(build_bcp_instance(2, {{1, 1, 2}}), InstanceError);
    CHECK_THROWS_AS(build_bcp_instance(2, {{1, 3, 2}}), InstanceError);
    CHECK_THROWS_AS(build_bcp_instance(2, {{0, 1, 2}}), InstanceError);
    CHECK_THROWS_AS(build_bcp_instance(2, {{1, 2, 0}}), InstanceError);
    CHECK_THROWS_AS(build_bcp_instance(2, {{1, 2, 2}, {2, 1, 3}}), InstanceError);
    CHECK_THROWS_AS(build_bcp_instance(0, {}), InstanceError);
}

TEST_CASE("duplicate edges with equal separation merge") {
    const BcpInstance inst = build_bcp_instance(2, {{1, 2, 4}, {2, 1, 4}, {1, 2, 4}});
    CHECK(inst.edge_count() == 1);
    CHECK(inst.degree(0) == 1);
}

TEST_CASE("adjacency is symmetric and matches the edge list") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform(1, 20);
        const BcpInstance inst = testgen::random_instance(rng, n, rng.unit(), 6);
        std::size_t half_edges = 0;
        for (int v = 0; v < n; ++v) {
            for (const Neighbor& nb : inst.neighbors(v)) {
                ++half_edges;
                bool back = false;
                for (const Neighbor& other : inst.neighbors(nb.vertex))
                    back = back || (other.vertex == v && other.d == nb.d);
                CHECK(back);
                const Edge e{std::min(v, nb.vertex) + 1, std::max(v, nb.vertex) + 1, nb.d};
                CHECK(std::find(inst.edges().begin(), inst.edges().end(), e) != inst.edges().end());
            }
        }
        CHECK(half_edges == 2 * inst.edge_count());
    }
}

TEST_CASE("split of a single vertex is a clique on its demand") {
    const BmcpInstance b = build_bmcp_instance({3}, {2}, {});
    const SplitInstance split = bmcp_to_bcp(b);
    CHECK(split.bcp.vertex_count() == 3);
    CHECK(split.bcp.edges() == std::vector<Edge>{{1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
}

TEST_CASE("unit demands leave the graph unchanged") {
    const std::vector<Edge> edges{{1, 2, 5}};
    const BmcpInstance b = build_bmcp_instance({1, 1}, {0, 0}, edges);
    const SplitInstance split = bmcp_to_bcp(b);
    CHECK(split.bcp.vertex_count() == 2);
    CHECK(split.bcp.edges() == edges);
}

TEST_CASE("split of two demand-2 vertices") {
    const std::vector<Edge> edges{{1, 2, 2}};
    const BmcpInstance b = build_bmcp_instance({2, 2}, {1, 3}, edges);
    const SplitInstance split = bmcp_to_bcp(b);
    CHECK(split.bcp.vertex_count() == 4);
    CHECK(split.bcp.edges() ==
          std::vector<Edge>{{1, 2, 1}, {1, 3, 2}, {1, 4, 2}, {2, 3, 2}, {2, 4, 2}, {3, 4, 3}});
    CHECK(split.map.range(0) == std::pair{0, 2});
    CHECK(split.map.range(1) == std::pair{2, 4});

    const auto legal = testgen::brute_legal(split.bcp, 6);
    REQUIRE(legal);
    const MultiAssignment multi = map_back(split.map, *legal);
    CHECK(multi[0].size() == 2);
    CHECK(multi[1].size() == 2);
    CHECK(bmcp_violations(b, multi, 6) == 0);
}

TEST_CASE("missing self-separation with demand > 1 is raised to 1") {
    const BmcpInstance b = build_bmcp_instance({2, 1}, {0, 0}, {});
    CHECK(b.self_separation(0) == 1);
    CHECK(b.self_separation(1) == 0);
    CHECK(b.warnings().size() == 1);
}

TEST_CASE("split size limit") {
    const BmcpInstance b = build_bmcp_instance({50, 60}, {1, 1}, {});
    CHECK_THROWS_AS(bmcp_to_bcp(b, 100), InstanceError);
    CHECK(bmcp_to_bcp(b, 110).bcp.vertex_count() == 110);
}

TEST_CASE("map_back reads off split ranges") {
    const VertexMap identity(std::vector<int>{1, 1});
    CHECK(map_back(identity, Coloring({4, 7}, 8)) == MultiAssignment{{4}, {7}});

    const VertexMap clique(std::vector<int>{3});
    CHECK(map_back(clique, Coloring({5, 1, 3}, 5)) == MultiAssignment{{1, 3, 5}});
}

TEST_CASE("bmcp_violations counts each broken requirement") {
    const std::vector<Edge> edges{{1, 2, 2}};
    const BmcpInstance b = build_bmcp_instance({2, 1}, {3, 0}, edges);
    CHECK(bmcp_violations(b, {{1, 4}, {6}}, 6) == 0);
    CHECK(bmcp_violations(b, {{1, 3}, {6}}, 6) == 1);   // self-separation
    CHECK(bmcp_violations(b, {{1, 4}, {5}}, 6) == 1);   // cross edge
    CHECK(bmcp_violations(b, {{1}, {6}}, 6) >= 1);      // wrong demand
    CHECK(bmcp_violations(b, {{1, 4}, {7}}, 6) >= 1);   // outside 1..k
}

TEST_CASE("property: split vertex and edge counts, legal colorings map back legally") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.uniform(1, 5);
        std::vector<int> demand(static_cast<std::size_t>(n)), self_d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            demand[static_cast<std::size_t>(i)] = rng.uniform(1, 3);
            self_d[static_cast<std::size_t>(i)] = rng.uniform(1, 3);
        }
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.below(2) == 0)
                    edges.push_back({u, v, rng.uniform(1, 3)});
        const BmcpInstance b = build_bmcp_instance(demand, self_d, edges);
        const SplitInstance split = bmcp_to_bcp(b);

        std::int64_t total = 0, expected_edges = 0;
        for (int w : demand) {
            total += w;
            expected_edges += std::int64_t{w} * (w - 1) / 2;
        }
        for (const Edge& e : edges)
            expected_edges += std::int64_t{demand[static_cast<std::size_t>(e.u - 1)]} *
                              demand[static_cast<std::size_t>(e.v - 1)];
        REQUIRE(split.bcp.vertex_count() == total);
        CHECK(static_cast<std::int64_t>(split.bcp.edge_count()) == expected_edges);
        for (int i = 0; i < n; ++i) {
            const auto [first, last] = split.map.range(i);
            CHECK(last - first == demand[static_cast<std::size_t>(i)]);
            for (int s = first; s < last; ++s)
                CHECK(split.map.original_of(s) == i);
        }

        if (total > 7)
            continue;
        const int k = testgen::brute_min_k(split.bcp);
        const auto legal = testgen::brute_legal(split.bcp, k);
        REQUIRE(legal);
        CHECK(bmcp_violations(b, map_back(split.map, *legal), k) == 0);
    }
}
