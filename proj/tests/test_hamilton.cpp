#include <doctest.h>

#include <random>

#include "domcrit/families.hpp"
#include "domcrit/hamilton.hpp"
#include "domcrit/structure.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace domcrit;

namespace {

bool valid_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() != static_cast<size_t>(g.n())) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : cycle) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

}  // namespace

TEST_CASE("fixed Hamiltonicity verdicts") {
    for (int k = 3; k <= 7; ++k) CHECK_FALSE(is_hamiltonian(make_Gk(k).graph).has_value());
    for (int n = 3; n <= 8; ++n) {
        auto c = is_hamiltonian(make_cycle(n).graph);
        REQUIRE(c.has_value());
        CHECK(valid_cycle(make_cycle(n).graph, *c));
        auto k = is_hamiltonian(make_complete(n).graph);
        REQUIRE(k.has_value());
        CHECK(valid_cycle(make_complete(n).graph, *k));
    }
    CHECK_FALSE(is_hamiltonian(make_fig5().graph).has_value());
    CHECK_FALSE(is_hamiltonian(Graph(2)).has_value());
    CHECK_FALSE(is_hamiltonian(make_star(3).graph).has_value());
    // the two large fixtures whose non-Hamiltonicity the cut-ratio argument gives
    CHECK_FALSE(is_hamiltonian(make_Jl(8).graph).has_value());
    CHECK_FALSE(is_hamiltonian(make_Tl(6).graph).has_value());
}

TEST_CASE("oracle agreement on random graphs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = trial % 2 ? testsupport::random_connected_graph(n, 0.35, rng)
                            : testsupport::random_graph(n, 0.45, rng);
        auto cycle = is_hamiltonian(g);
        CAPTURE(trial);
        CHECK(cycle.has_value() == oracle::hamiltonian(g));
        if (cycle) CHECK(valid_cycle(g, *cycle));
    }
}

TEST_CASE("longest cycle fixed values") {
    Graph c6_chord = add_edge(make_cycle(6).graph, 0, 2);
    CHECK(longest_cycle(c6_chord).length() == 6);
    CHECK(longest_cycle(make_Gk(3).graph).length() == 8);
    // the three degree-2 path interiors force an odd number of triangle
    // hops, so P_{3,3,3} misses one vertex (cross-checked by enumeration)
    CHECK(longest_cycle(make_P333().graph).length() == 8);
    CHECK_FALSE(is_hamiltonian(make_P333().graph).has_value());
    CHECK(oracle::longest_cycle_length(make_P333().graph) == 8);

    CHECK_THROWS_AS(longest_cycle(make_star(4).graph), std::invalid_argument);  // not 2-connected
}

TEST_CASE("longest cycle refuses above the exactness bound") {
    CHECK_THROWS_AS(longest_cycle(make_complete(19).graph), TooLarge);
}

TEST_CASE("longest cycle agrees with cycle enumeration") {
    std::mt19937 rng(5150);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = testsupport::random_connected_graph(n, 0.4, rng);
        if (!is_k_connected(g, 2)) continue;
        ++checked;
        CHECK(longest_cycle(g).length() == oracle::longest_cycle_length(g));
    }
    CHECK(checked >= 40);
}

TEST_CASE("hamiltonian implies longest cycle covers everything") {
    std::mt19937 rng(6021);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = testsupport::random_connected_graph(n, 0.5, rng);
        if (!is_k_connected(g, 2)) continue;
        if (is_hamiltonian(g)) CHECK(longest_cycle(g).length() == g.n());
    }
}

TEST_CASE("cycle orientation arithmetic") {
    CycleOrientation c({4, 7, 1, 3, 0}, 8);
    CHECK(c.length() == 5);
    CHECK(c.successor(4) == 7);
    CHECK(c.predecessor(4) == 0);
    CHECK(c.successor(4, 2) == 1);
    CHECK(c.successor(0) == 4);
    for (int v : c.order()) {
        CHECK(c.successor(c.predecessor(v)) == v);
        CHECK(c.predecessor(c.successor(v)) == v);
        CHECK(c.successor(v, 5) == v);
    }
    CHECK(c.segment(7, 3) == std::vector<int>{7, 1, 3});
    CHECK(c.segment_size(7, 3) == 3);
    // complementary segments partition the cycle: |C[u,v]| + |C[v+,u-]| = |C|
    // (whenever the second arc does not wrap past the first, i.e. v != u-)
    for (int u : c.order())
        for (int v : c.order()) {
            if (v == c.predecessor(u)) continue;
            CHECK(c.segment_size(u, v) + c.segment_size(c.successor(v), c.predecessor(u)) ==
                  c.length());
        }
    CHECK_FALSE(c.contains(2));
    CHECK_THROWS_AS(c.successor(2), std::invalid_argument);
    CHECK_THROWS_AS(CycleOrientation({0, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(CycleOrientation({0, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("cycle lemmas on the figure-5 fixture") {
    CycleLemmaReport report = verify_cycle_lemmas(make_fig5().graph);
    CHECK_FALSE(report.claw_lemmas_applicable);  // fig5 contains a claw
    CHECK(report.all_passed());
    REQUIRE(report.components.size() >= 1);
    for (const auto& comp : report.components) {
        CHECK(comp.lemmas[static_cast<size_t>(CycleLemma::AttachmentNeighborsOffX)].state ==
              LemmaStatus::State::Pass);
        CHECK(comp.lemmas[static_cast<size_t>(CycleLemma::NoOutsidePathInXPlus)].state ==
              LemmaStatus::State::Pass);
        CHECK(comp.lemmas[static_cast<size_t>(CycleLemma::AroundAttachmentChord)].state ==
              LemmaStatus::State::NotApplicable);
    }
}

TEST_CASE("cycle lemmas hypothesis gates") {
    // G_3 contains a claw: claw-free lemmas not applicable, others evaluated
    CycleLemmaReport report = verify_cycle_lemmas(make_Gk(3).graph);
    CHECK_FALSE(report.claw_lemmas_applicable);
    CHECK(report.all_passed());

    CHECK_THROWS_AS(verify_cycle_lemmas(make_complete(4).graph), std::invalid_argument);
    CHECK_THROWS_AS(verify_cycle_lemmas(make_star(3).graph), std::invalid_argument);
}

TEST_CASE("cycle lemmas on claw-free non-Hamiltonian samples") {
    // members of the F classes are claw-free and non-Hamiltonian
    for (const Graph& g : {make_F1({{3, 3, 3, 3, 3}}).graph, make_F2({{3, 3, 2}}).graph,
                           make_F3({3}).graph}) {
        REQUIRE_FALSE(has_induced_claw(g));
        REQUIRE_FALSE(is_hamiltonian(g).has_value());
        CycleLemmaReport report = verify_cycle_lemmas(g, /*strict=*/true);
        CHECK(report.claw_lemmas_applicable);
        CHECK(report.all_passed());
        CHECK(report.cycles_checked >= 1);
    }
}
