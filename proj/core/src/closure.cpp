#include "domcrit/closure.hpp"

#include <algorithm>

#include "domcrit/hamilton.hpp"
#include "domcrit/isomorphism.hpp"
#include "domcrit/structure.hpp"

namespace domcrit {

namespace {

bool neighborhood_eligible(const Graph& g, int v) {
    VertexSet nb = neighbors(g, v);
    if (nb.size() < 2) return false;
    bool complete = true;
    for (size_t i = 0; i < nb.size() && complete; ++i)
        for (size_t j = i + 1; j < nb.size() && complete; ++j)
            if (!g.adjacent(nb[i], nb[j])) complete = false;
    if (complete) return false;
    return is_connected(induced_subgraph(g, nb).graph);
}

}  // namespace

ClosureResult closure(const Graph& g) {
    if (has_induced_claw(g)) throw std::invalid_argument("closure: claw-free input required");
    if (!is_connected(g)) throw std::invalid_argument("closure: connected input required");
    ClosureResult result{g, {}};
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < result.closed.n(); ++v) {
            if (!neighborhood_eligible(result.closed, v)) continue;
            VertexSet nb = neighbors(result.closed, v);
            CompletionStep step{v, {}};
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!result.closed.adjacent(nb[i], nb[j])) {
                        result.closed.set_edge(nb[i], nb[j]);
                        step.added.emplace_back(nb[i], nb[j]);
                    }
            result.trace.push_back(std::move(step));
            changed = true;
        }
    }
    return result;
}

std::string verdict_name(ClassMembership::Verdict v) {
    switch (v) {
        case ClassMembership::Verdict::F1: return "F1";
        case ClassMembership::Verdict::F2: return "F2";
        case ClassMembership::Verdict::F3: return "F3";
        case ClassMembership::Verdict::P333: return "P_{3,3,3}";
        case ClassMembership::Verdict::None: return "none";
    }
    return "?";
}

ClassMembership classify(const Graph& g) {
    int n = g.n();
    auto attempt = [&](const FamilySpec& spec,
                       ClassMembership::Verdict verdict) -> std::optional<ClassMembership> {
        LabeledGraph member = make_family(spec);
        if (member.graph.n() != n) return std::nullopt;
        IsoResult iso = is_isomorphic(member.graph, g);
        if (!iso.isomorphic()) return std::nullopt;
        return ClassMembership{verdict, spec, iso.mapping};
    };

    if (n == 9)
        if (auto m = attempt(P333Spec{}, ClassMembership::Verdict::P333)) return *m;

    // F1: five blocks of order >= 3, |V| = sum - 6. Q1..Q3 are mutually
    // symmetric, as are Q4/Q5.
    for (int q1 = 3; q1 <= n; ++q1)
        for (int q2 = q1; q2 <= n; ++q2)
            for (int q3 = q2; q3 <= n; ++q3)
                for (int q4 = 3; q4 <= n; ++q4)
                    for (int q5 = q4; q5 <= n; ++q5) {
                        if (q1 + q2 + q3 + q4 + q5 != n + 6) continue;
                        F1Spec spec{{q1, q2, q3, q4, q5}};
                        if (auto m = attempt(spec, ClassMembership::Verdict::F1)) return *m;
                    }

    // F2: |V| = |R1| + |R2| + |R3| + 1; R1/R2 symmetric.
    for (int r1 = 3; r1 <= n; ++r1)
        for (int r2 = r1; r2 <= n; ++r2)
            for (int r3 = 2; r3 <= n; ++r3) {
                if (r1 + r2 + r3 + 1 != n) continue;
                F2Spec spec{{r1, r2, r3}};
                if (auto m = attempt(spec, ClassMembership::Verdict::F2)) return *m;
            }

    // F3: |V| = |K| + 6.
    if (n - 6 >= 3)
        if (auto m = attempt(F3Spec{n - 6}, ClassMembership::Verdict::F3)) return *m;

    return {};
}

PummResult check_theorem_pumm(const Graph& g, const Deadline* dl) {
    if (!is_k_connected(g, 2))
        return {PummResult::Outcome::HypothesisUnmet, "not 2-connected", {}};
    if (has_induced_claw(g))
        return {PummResult::Outcome::HypothesisUnmet, "contains an induced claw", {}};
    LabeledGraph n122 = make_net(1, 2, 2);
    if (find_induced(g, n122.graph, "N_{1,2,2}"))
        return {PummResult::Outcome::HypothesisUnmet, "contains an induced N_{1,2,2}", {}};
    LabeledGraph n113 = make_net(1, 1, 3);
    if (find_induced(g, n113.graph, "N_{1,1,3}"))
        return {PummResult::Outcome::HypothesisUnmet, "contains an induced N_{1,1,3}", {}};

    if (is_hamiltonian(g, dl)) return {PummResult::Outcome::Hamiltonian, "Hamiltonian", {}};
    if (g.n() == 9 && is_isomorphic(g, make_P333().graph).isomorphic())
        return {PummResult::Outcome::IsomorphicP333, "isomorphic to P_{3,3,3}", {}};
    ClassMembership membership = classify(closure(g).closed);
    if (membership.verdict == ClassMembership::Verdict::F1 ||
        membership.verdict == ClassMembership::Verdict::F2 ||
        membership.verdict == ClassMembership::Verdict::F3)
        return {PummResult::Outcome::ClosureInFamily, "closure in " + verdict_name(membership.verdict),
                membership};
    return {PummResult::Outcome::Failed, "no branch of the trichotomy holds", membership};
}

}  // namespace domcrit
