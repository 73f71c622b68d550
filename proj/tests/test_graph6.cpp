#include <doctest.h>

#include <random>
#include <sstream>

#include "domcrit/families.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/isomorphism.hpp"
#include "support/random_graphs.hpp"

using namespace domcrit;

#include "support/graph6_reference.inc"

namespace {

Graph graph_from_edge_string(int n, const std::string& edges) {
    Graph g(n);
    std::stringstream ss(edges);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        if (pair.empty()) continue;
        auto comma = pair.find(',');
        g.set_edge(std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1)));
    }
    return g;
}

}  // namespace

TEST_CASE("fixed codec examples") {
    CHECK(graph6_encode(Graph(0)) == "?");

    Graph k2 = graph6_decode("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph d = graph6_decode("D?{");
    CHECK(d.n() == 5);
    CHECK(graph6_encode(d) == "D?{");
    // hand-decoded: the set bits are exactly x_{0,4} x_{1,4} x_{2,4} x_{3,4}
    CHECK(is_isomorphic(d, make_star(4).graph).isomorphic());
}

TEST_CASE("header tolerated, errors rejected") {
    Graph g = graph6_decode(">>graph6<<A_");
    CHECK(g.n() == 2);

    CHECK_THROWS_AS(graph6_decode("A"), Graph6Error);       // truncated bits
    CHECK_THROWS_AS(graph6_decode("A_?"), Graph6Error);     // trailing data
    CHECK_THROWS_AS(graph6_decode("B\x1f_"), Graph6Error);  // char below 63
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("A\x7f"), Graph6Error);   // char above 126

    // nonzero padding: n=2 needs 1 bit; '_' = 100000 is valid, '?'+1 bits...
    // 'o' = 101100 has padding bits set
    CHECK_THROWS_AS(graph6_decode("Ao"), Graph6Error);
}

TEST_CASE("byte equality against the reference encoder") {
    for (const auto& rec : kGraph6Reference) {
        Graph g = graph_from_edge_string(rec.n, rec.edges);
        CHECK(graph6_encode(g) == rec.line);
        Graph back = graph6_decode(rec.line);
        CHECK(back == g);
    }
}

TEST_CASE("round trip identity on random graphs including escape sizes") {
    std::mt19937 rng(40109);
    for (int trial = 0; trial < 60; ++trial) {
        int n = trial < 40 ? static_cast<int>(rng() % 65) : 60 + static_cast<int>(rng() % 80);
        Graph g = testsupport::random_graph(n, 0.3, rng);
        Graph back = graph6_decode(graph6_encode(g));
        CHECK(back == g);
    }
}

TEST_CASE("newline and carriage return stripped") {
    CHECK(graph6_decode("A_\n").n() == 2);
    CHECK(graph6_decode("A_\r\n").n() == 2);
}
