#include <benchmark/benchmark.h>

#include <random>

#include "domcrit/criticality.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/hamilton.hpp"
#include "domcrit/solvers.hpp"
#include "domcrit/structure.hpp"
#include "smallgen/smallgen.hpp"

using namespace domcrit;

namespace {

Graph random_graph(int n, double p, uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.set_edge(u, v);
    return g;
}

void BM_gamma_gk(benchmark::State& state) {
    Graph g = make_Gk(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(domination_number(g).value);
}
BENCHMARK(BM_gamma_gk)->Arg(5)->Arg(7)->Arg(8);

void BM_gamma_c_tl(benchmark::State& state) {
    Graph g = make_Tl(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(connected_domination_number(g).value);
}
BENCHMARK(BM_gamma_c_tl)->Arg(4)->Arg(6);

void BM_vertex_criticality(benchmark::State& state) {
    Graph g = make_Gk(static_cast<int>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            check_vertex_critical(g, InvariantKind::Gamma, static_cast<int>(state.range(0)))
                .critical);
}
BENCHMARK(BM_vertex_criticality)->Arg(4)->Arg(6);

void BM_hamilton_dense(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 99);
    for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(g).has_value());
}
BENCHMARK(BM_hamilton_dense)->Arg(10)->Arg(14)->Arg(18);

void BM_longest_cycle(benchmark::State& state) {
    Graph g = make_Gk(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(longest_cycle(g).length());
}
BENCHMARK(BM_longest_cycle)->Arg(4)->Arg(5)->Arg(6);

void BM_claw_detection(benchmark::State& state) {
    Graph g = random_graph(10, 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(has_induced_claw(g));
}
BENCHMARK(BM_claw_detection);

void BM_graph6_roundtrip(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state) {
        std::string line = graph6_encode(g);
        benchmark::DoNotOptimize(graph6_decode(line).n());
    }
}
BENCHMARK(BM_graph6_roundtrip)->Arg(10)->Arg(64)->Arg(200);

void BM_canonical_form(benchmark::State& state) {
    Graph g = random_graph(10, 0.5, 23);
    for (auto _ : state) benchmark::DoNotOptimize(smallgen::canonical_form(g));
}
BENCHMARK(BM_canonical_form);

void BM_catalog_level(benchmark::State& state) {
    for (auto _ : state) {
        smallgen::Catalog cat = smallgen::generate_all(static_cast<int>(state.range(0)), 2);
        benchmark::DoNotOptimize(cat.total());
    }
}
BENCHMARK(BM_catalog_level)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_violating_cutset(benchmark::State& state) {
    Graph g = random_graph(10, 0.35, 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_violating_cutset(g, 4).has_value());
}
BENCHMARK(BM_violating_cutset);

}  // namespace

BENCHMARK_MAIN();
