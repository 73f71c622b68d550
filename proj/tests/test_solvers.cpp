#include <doctest.h>

#include <random>

#include "domcrit/families.hpp"
#include "domcrit/solvers.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace domcrit;

TEST_CASE("domination predicates") {
    Graph k5 = make_complete(5).graph;
    VertexSet all5 = {0, 1, 2, 3, 4};
    CHECK(dominates(k5, {0}, all5));

    LabeledGraph g3 = make_Gk(3);
    VertexSet a = {g3.id_of("a1"), g3.id_of("a2"), g3.id_of("a3")};
    std::sort(a.begin(), a.end());
    VertexSet v_all;
    for (int v = 0; v < g3.graph.n(); ++v) v_all.push_back(v);
    CHECK(dominates(g3.graph, a, v_all));  // A >- G_k

    Graph c6 = make_cycle(6).graph;
    VertexSet all6 = {0, 1, 2, 3, 4, 5};
    CHECK_FALSE(dominates(c6, {0}, all6));

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(dominates_connected(p4, {1, 2}, {0, 1, 2, 3}));
    CHECK_FALSE(dominates_connected(p4, {0, 3}, {0, 1, 2, 3}));  // G[d] has isolated vertices

    Graph k2 = make_complete(2).graph;
    CHECK_FALSE(dominates_total(k2, {0}));
    CHECK(dominates_total(k2, {0, 1}));
}

TEST_CASE("fixed invariant values") {
    for (int k = 3; k <= 7; ++k)
        CHECK(*domination_number(make_Gk(k).graph).value == k);

    CHECK(*connected_domination_number(make_P333().graph).value == 5);
    CHECK(*domination_number(make_star(7).graph).value == 1);
    CHECK(*connected_domination_number(make_complete(6).graph).value == 1);
    CHECK(*independence_number(make_cycle(6).graph).value == 3);
    CHECK(*connected_domination_number(make_cycle(6).graph).value == 4);
}

TEST_CASE("undefined cases") {
    Graph two_parts(5);
    two_parts.set_edge(0, 1);
    two_parts.set_edge(2, 3);
    CHECK_FALSE(connected_domination_number(two_parts).defined());

    Graph with_isolated(3);
    with_isolated.set_edge(0, 1);
    CHECK_FALSE(total_domination_number(with_isolated).defined());

    Graph k1(1);
    CHECK(*domination_number(k1).value == 1);
    CHECK_FALSE(total_domination_number(k1).defined());
    CHECK(*connected_domination_number(k1).value == 1);
}

TEST_CASE("oracle equivalence on random connected graphs") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = testsupport::random_connected_graph(n, 0.25 + 0.5 * (rng() % 3) / 2.0, rng);
        CAPTURE(trial);
        CHECK(domination_number(g).value == oracle::gamma(g));
        CHECK(connected_domination_number(g).value == oracle::gamma_c(g));
        CHECK(total_domination_number(g).value == oracle::gamma_t(g));
        CHECK(*independence_number(g).value == oracle::alpha(g));
    }
    // disconnected inputs as well (gamma, gamma_t, alpha remain defined)
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(2 + static_cast<int>(rng() % 8), 0.2, rng);
        CHECK(domination_number(g).value == oracle::gamma(g));
        CHECK(connected_domination_number(g).value == oracle::gamma_c(g));
        CHECK(total_domination_number(g).value == oracle::gamma_t(g));
        CHECK(*independence_number(g).value == oracle::alpha(g));
    }
}

TEST_CASE("witness validity and minimality spot checks") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = testsupport::random_connected_graph(n, 0.35, rng);
        VertexSet all;
        for (int v = 0; v < n; ++v) all.push_back(v);

        SolveResult gam = domination_number(g);
        CHECK(dominates(g, gam.witness, all));
        CHECK(static_cast<int>(gam.witness.size()) == *gam.value);

        SolveResult gc = connected_domination_number(g);
        REQUIRE(gc.defined());
        CHECK(dominates_connected(g, gc.witness, all));
        // removing any one vertex breaks domination or connectivity
        if (*gc.value >= 2) {
            for (size_t drop = 0; drop < gc.witness.size(); ++drop) {
                VertexSet smaller;
                for (size_t i = 0; i < gc.witness.size(); ++i)
                    if (i != drop) smaller.push_back(gc.witness[i]);
                CHECK_FALSE(dominates_connected(g, smaller, all));
            }
        }

        SolveResult gt = total_domination_number(g);
        if (gt.defined()) CHECK(dominates_total(g, gt.witness));
    }
}

TEST_CASE("order relations on connected graphs") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testsupport::random_connected_graph(n, 0.3, rng);
        int gam = *domination_number(g).value;
        int gc = *connected_domination_number(g).value;
        auto gt = total_domination_number(g).value;
        CHECK(gam <= gc);
        if (gt) {
            CHECK(gam <= *gt);
            if (gc >= 2) CHECK(*gt <= gc);
        }
    }
}

TEST_CASE("adding an edge never increases the domination invariants") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = testsupport::random_connected_graph(n, 0.3, rng);
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || g.adjacent(u, v)) continue;
        Graph h = add_edge(g, u, v);
        CHECK(*domination_number(h).value <= *domination_number(g).value);
        CHECK(*connected_domination_number(h).value <= *connected_domination_number(g).value);
        auto gt_g = total_domination_number(g).value;
        auto gt_h = total_domination_number(h).value;
        if (gt_g && gt_h) CHECK(*gt_h <= *gt_g);
    }
}

TEST_CASE("solve_within caps the search") {
    Graph c6 = make_cycle(6).graph;
    CHECK_FALSE(solve_within(c6, InvariantKind::Gamma, 1).has_value());
    auto r = solve_within(c6, InvariantKind::Gamma, 2);
    REQUIRE(r.has_value());
    CHECK(*r->value == 2);
    CHECK_FALSE(solve_within(c6, InvariantKind::GammaC, 3).has_value());
}

TEST_CASE("deterministic witnesses") {
    LabeledGraph g5 = make_Gk(5);
    SolveResult a = domination_number(g5.graph);
    SolveResult b = domination_number(g5.graph);
    CHECK(a.witness == b.witness);
}
