#include <doctest.h>

#include <random>
#include <set>

#include "domcrit/graph.hpp"
#include "domcrit/isomorphism.hpp"
#include "smallgen/smallgen.hpp"
#include "support/random_graphs.hpp"

using domcrit::Graph;

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(8675309);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testsupport::random_graph(n, 0.1 + 0.08 * (trial % 10), rng);
        uint64_t f = smallgen::canonical_form(g);
        Graph h = testsupport::random_relabel(g, rng);
        CHECK(smallgen::canonical_form(h) == f);
        // the form unpacks to an isomorphic copy
        Graph canon = smallgen::graph_of_form(f, n);
        CHECK(domcrit::is_isomorphic(canon, g).isomorphic());
    }
}

TEST_CASE("canonical form distinguishes all graphs up to n = 6 (brute force)") {
    // enumerate every labeled graph and count distinct canonical forms
    for (int n = 1; n <= 6; ++n) {
        std::set<uint64_t> forms;
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << bits); ++mask)
            forms.insert(smallgen::canonical_form(smallgen::graph_of_form(mask, n)));
        CHECK(static_cast<long long>(forms.size()) == smallgen::kAllGraphCounts[n]);
    }
}

TEST_CASE("levelwise generation matches the published counts up to n = 8") {
    smallgen::Catalog cat = smallgen::generate_all(8, 2);
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<long long>(cat.by_n[n].size()) == smallgen::kAllGraphCounts[n]);
        long long connected = 0;
        for (uint64_t form : cat.by_n[n])
            if (domcrit::is_connected(smallgen::graph_of_form(form, n))) ++connected;
        CHECK(connected == smallgen::kConnectedGraphCounts[n]);
    }
    // levels are deduplicated and sorted
    for (int n = 1; n <= 8; ++n) {
        for (size_t i = 1; i < cat.by_n[n].size(); ++i)
            CHECK(cat.by_n[n][i - 1] < cat.by_n[n][i]);
    }
}

TEST_CASE("forms in generated levels are canonical") {
    smallgen::Catalog cat = smallgen::generate_all(6, 1);
    for (int n = 1; n <= 6; ++n)
        for (uint64_t form : cat.by_n[n])
            CHECK(smallgen::canonical_form(smallgen::graph_of_form(form, n)) == form);
}

TEST_CASE("hard symmetric cases canonicalize quickly and correctly") {
    // complete, empty, bipartite-regular and vertex-transitive graphs
    Graph empty(10);
    Graph complete(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) complete.set_edge(i, j);
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.set_edge(i, (i + 1) % 5);
        petersen.set_edge(i, i + 5);
        petersen.set_edge(5 + i, 5 + (i + 2) % 5);
    }
    std::mt19937 rng(31);
    for (Graph base : {empty, complete, petersen}) {
        uint64_t f = smallgen::canonical_form(base);
        for (int t = 0; t < 20; ++t)
            CHECK(smallgen::canonical_form(testsupport::random_relabel(base, rng)) == f);
    }
}
