#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domcrit/families.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/util.hpp"

namespace domcrit {

struct CompletionStep {
    int vertex;
    std::vector<Edge> added;
};

struct ClosureResult {
    Graph closed;
    std::vector<CompletionStep> trace;
};

/// Ryjacek closure: repeatedly completes the neighborhood of any vertex
/// whose neighborhood induces a connected, non-complete subgraph, until no
/// vertex is eligible. Requires claw-free connected input.
ClosureResult closure(const Graph& g);

struct ClassMembership {
    enum class Verdict { F1, F2, F3, P333, None } verdict = Verdict::None;
    std::optional<FamilySpec> spec;  // recovered parameters when matched
    std::vector<int> mapping;        // family member vertex -> input vertex

    bool matched() const { return verdict != Verdict::None; }
};

std::string verdict_name(ClassMembership::Verdict v);

/// Tests the (closed) input against P_{3,3,3} and every member of the three
/// block families with the same vertex count, by parameter enumeration plus
/// isomorphism.
ClassMembership classify(const Graph& g_closed);

struct PummResult {
    enum class Outcome {
        HypothesisUnmet,   // not 2-connected or not {claw, N_{1,2,2}, N_{1,1,3}}-free
        Hamiltonian,       // branch 1
        IsomorphicP333,    // branch 2
        ClosureInFamily,   // branch 3: cl(G) in F1/F2/F3
        Failed,            // no branch holds
    } outcome;
    std::string detail;
    ClassMembership membership;  // set for ClosureInFamily

    bool trichotomy_holds() const {
        return outcome == Outcome::Hamiltonian || outcome == Outcome::IsomorphicP333 ||
               outcome == Outcome::ClosureInFamily;
    }
};

/// Runs the trichotomy check: Hamiltonian, isomorphic to P_{3,3,3}, or
/// closure lands in F1/F2/F3.
PummResult check_theorem_pumm(const Graph& g, const Deadline* dl = nullptr);

}  // namespace domcrit
