#pragma once

#include <optional>
#include <string>

#include "domcrit/graph.hpp"
#include "domcrit/util.hpp"

namespace domcrit {

enum class InvariantKind { Gamma, GammaC, GammaT, Alpha };

std::string invariant_name(InvariantKind kind);

struct SolveResult {
    InvariantKind kind;
    std::optional<int> value;  // nullopt = undefined (e.g. gamma_c of a disconnected graph)
    VertexSet witness;         // attains the value when defined
    bool optimal = true;

    bool defined() const { return value.has_value(); }
};

/// D >- X: every vertex of x is in d or adjacent to a vertex of d.
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& x);

/// D >- X with G[D] connected.
bool dominates_connected(const Graph& g, const VertexSet& d, const VertexSet& x);

/// Every vertex of G (including members of d) has a neighbor in d.
bool dominates_total(const Graph& g, const VertexSet& d);

// Exact solvers (branch and bound, n <= 64; throws TooLarge beyond).
// Witnesses are deterministic: candidates are explored lowest-id-first.
SolveResult domination_number(const Graph& g, const Deadline* dl = nullptr);
SolveResult connected_domination_number(const Graph& g, const Deadline* dl = nullptr);
SolveResult total_domination_number(const Graph& g, const Deadline* dl = nullptr);
SolveResult independence_number(const Graph& g, const Deadline* dl = nullptr);

SolveResult solve_invariant(const Graph& g, InvariantKind kind, const Deadline* dl = nullptr);

/// Minimum dominating set of the given kind with size <= cap, or nullopt if
/// none exists within the cap (or the invariant is undefined). Used by the
/// criticality checkers, which only need "drops below k" decisions.
std::optional<SolveResult> solve_within(const Graph& g, InvariantKind kind, int cap,
                                        const Deadline* dl = nullptr);

}  // namespace domcrit
