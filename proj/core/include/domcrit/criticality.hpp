#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "domcrit/graph.hpp"
#include "domcrit/solvers.hpp"

namespace domcrit {

struct CriticalityReport {
    InvariantKind kind;
    bool edge_variant;
    int k;
    bool critical;

    // one minimum witness per deletion (addition), in original vertex ids
    std::map<int, VertexSet> vertex_witnesses;
    std::map<std::pair<int, int>, VertexSet> edge_witnesses;

    struct Violation {
        int vertex = -1;
        std::pair<int, int> edge{-1, -1};
        std::string reason;
    };
    std::optional<Violation> violation;  // first failure, in vertex order
};

/// v is a support vertex iff it has a degree-1 neighbor.
bool is_support_vertex(const Graph& g, int v);

/// Decides k-vertex-criticality for gamma / gamma_c / gamma_t. For gamma_t,
/// support vertices are exempt. A deletion that makes the invariant
/// undefined (gamma_c of a disconnected remainder) fails criticality.
CriticalityReport check_vertex_critical(const Graph& g, InvariantKind kind, int k,
                                        const Deadline* dl = nullptr);

/// Decides k-edge-criticality over all non-edges; gamma and gamma_c only.
CriticalityReport check_edge_critical(const Graph& g, InvariantKind kind, int k,
                                      const Deadline* dl = nullptr);

/// Infers k by solving the base graph first.
CriticalityReport check_vertex_critical_auto(const Graph& g, InvariantKind kind,
                                             const Deadline* dl = nullptr);

struct DvFactsReport {
    struct Entry {
        int vertex;
        bool size_ok;       // |D_v| = k-1 (gamma) / value exactly k-1 (gamma_c)
        bool adjacency_ok;  // no vertex of D_v adjacent to v (gamma only)
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
    bool exhaustive = false;  // every minimum set checked, not just the stored witness
};

/// Verifies the per-deletion witness facts on a graph already known to be
/// kind-vertex-critical of order k: for gamma, |D_v| = k-1 and D_v avoids
/// N(v) (over all minimum sets when exhaustive, n <= 10); for gamma_c,
/// gamma_c(G - v) = k-1 exactly. Errors when g is not critical.
DvFactsReport verify_Dv_facts(const Graph& g, InvariantKind kind, int k,
                              bool exhaustive = false, const Deadline* dl = nullptr);

}  // namespace domcrit
