#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct GkSpec { int k; };                      // k >= 3
struct JlSpec { int l; };                      // l >= 6
struct TlSpec { int l; };                      // l >= 2
struct P333Spec {};
struct NetSpec { int s1, s2, s3; };            // each >= 1
struct StarSpec { int n; };                    // K_{1,n}, n >= 1
struct CycleSpec { int n; };                   // n >= 3
struct CompleteSpec { int n; };                // n >= 1
struct F1Spec { std::array<int, 5> q; };       // |Q_1..Q_5| >= 3
struct F2Spec { std::array<int, 3> r; };       // |R_1|,|R_2| >= 3, |R_3| >= 2
struct F3Spec { int k; };                      // |K| >= 3
struct Fig5Spec {};

using FamilySpec = std::variant<GkSpec, JlSpec, TlSpec, P333Spec, NetSpec, StarSpec,
                                CycleSpec, CompleteSpec, F1Spec, F2Spec, F3Spec, Fig5Spec>;

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // bijection onto the construction's named vertices

    int id_of(const std::string& label) const;
};

LabeledGraph make_Gk(int k);
LabeledGraph make_Jl(int l);
LabeledGraph make_Tl(int l);
LabeledGraph make_P333();
LabeledGraph make_net(int s1, int s2, int s3);
LabeledGraph make_star(int n);
LabeledGraph make_cycle(int n);
LabeledGraph make_complete(int n);
LabeledGraph make_F1(const F1Spec& spec);
LabeledGraph make_F2(const F2Spec& spec);
LabeledGraph make_F3(const F3Spec& spec);
LabeledGraph make_fig5();

LabeledGraph make_family(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);

}  // namespace domcrit
