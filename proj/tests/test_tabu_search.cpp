#include "bandcol/evaluation.hpp"
#include "bandcol/tabu_search.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace bandcol;

TEST_CASE("legal start is returned untouched") {
    const BcpInstance inst = build_bcp_instance(2, {{1, 2, 3}});
    Rng rng(1);
    const Coloring start({1, 5}, 5);
    const TsResult r = tabu_search(inst, start, {}, rng);
    CHECK(r.coloring == start);
    CHECK(r.f == 0);
    CHECK(r.iterations == 0);
}

TEST_CASE("single edge d=3 with 5 colors is fixed quickly") {
    const BcpInstance inst = build_bcp_instance(2, {{1, 2, 3}});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        TsParams params;
        params.alpha = 100;
        const TsResult r = tabu_search(inst, Coloring({1, 2}, 5), params, rng);
        CHECK(r.f == 0);
        CHECK(evaluate_direct(inst, r.coloring) == 0);
    }
}

TEST_CASE("unique best move is selected") {
    // vertex 1 conflicts with vertices 2 and 3; color 5 is the only clean one
    const BcpInstance inst = build_bcp_instance(3, {{1, 2, 2}, {1, 3, 2}});
    const EvalState st(inst, Coloring({2, 1, 3}, 5));
    TabuState tabu(3, 5);
    tabu.best_f = st.objective();
    Rng rng(4);
    const auto m = select_move(st, tabu, rng);
    REQUIRE(m);
    CHECK(m->vertex == 0);
    CHECK(m->color == 5);
    CHECK(m->delta == -st.objective());
}

TEST_CASE("ties between two best moves are split evenly") {
    // one edge d=1 with both ends on color 1 of 2: the two best moves are
    // (vertex 1 -> 2) and (vertex 2 -> 2)
    const BcpInstance inst = build_bcp_instance(2, {{1, 2, 1}});
    const EvalState st(inst, Coloring({1, 1}, 2));
    TabuState tabu(2, 2);
    tabu.best_f = st.objective();
    Rng rng(2025);
    int first = 0;
    const int trials = 10'000;
    for (int i = 0; i < trials; ++i) {
        const auto m = select_move(st, tabu, rng);
        REQUIRE(m);
        first += m->vertex == 0;
    }
    const double share = static_cast<double>(first) / trials;
    CHECK(std::abs(share - 0.5) <= 0.05);
}

TEST_CASE("aspiration overrides tabu status") {
    const BcpInstance inst = build_bcp_instance(2, {{1, 2, 1}});
    const EvalState st(inst, Coloring({1, 1}, 2));
    TabuState tabu(2, 2);
    tabu.best_f = 1;
    tabu.forbid(0, 2, 100);
    tabu.forbid(1, 2, 100);
    Rng rng(5);
    const auto m = select_move(st, tabu, rng);
    REQUIRE(m);
    CHECK(m->delta == -1);

    tabu.best_f = 0;  // no move can beat 0, so nothing is admissible
    CHECK_FALSE(select_move(st, tabu, rng));
    CHECK(select_any_move(st, tabu, rng));
}

TEST_CASE("reverse move stays tabu for exactly the tenure") {
    TabuState tabu(1, 3);
    tabu.iteration = 10;
    tabu.forbid(0, 2, 4);
    for (int step = 1; step <= 4; ++step) {
        tabu.iteration = 10 + step;
        CHECK(tabu.is_tabu(0, 2));
    }
    tabu.iteration = 15;
    CHECK_FALSE(tabu.is_tabu(0, 2));
}

TEST_CASE("property: returned f matches the returned coloring and never exceeds the start") {
    Rng gen(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.uniform(2, 25), k = gen.uniform(2, 10);
        const BcpInstance inst = testgen::random_instance(gen, n, 0.4, 4);
        const Coloring start = testgen::random_coloring(gen, n, k);
        TsParams params;
        params.alpha = gen.uniform(1, 500);
        params.kind = trial % 3 == 0 ? LocalSearchKind::steepest_descent : LocalSearchKind::tabu;
        Rng a(trial), b(trial);
        const TsResult r = tabu_search(inst, start, params, a);
        CHECK(r.f == evaluate_direct(inst, r.coloring));
        CHECK(r.f <= evaluate_direct(inst, start));
        CHECK(r.iterations <= params.alpha);
        const TsResult again = tabu_search(inst, start, params, b);
        CHECK(again.coloring == r.coloring);
        CHECK(again.iterations == r.iterations);
    }
}

TEST_CASE("steepest descent stops at a local optimum") {
    Rng gen(9);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = gen.uniform(2, 20), k = gen.uniform(2, 8);
        const BcpInstance inst = testgen::random_instance(gen, n, 0.5, 3);
        TsParams params;
        params.kind = LocalSearchKind::steepest_descent;
        Rng rng(trial);
        const TsResult r = tabu_search(inst, testgen::random_coloring(gen, n, k), params, rng);
        const EvalState st(inst, r.coloring);
        for (int u : st.conflicting())
            for (int c = 1; c <= k; ++c)
                CHECK(st.move_delta(u, c) >= 0);
    }
}
