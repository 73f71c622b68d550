#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/util.hpp"

namespace domcrit {

/// Minimum vertex-cut size; |V|-1 for complete graphs, 0 for disconnected
/// input. Internally-disjoint paths via vertex-split max flow over all
/// non-adjacent pairs, with early exit at the running minimum.
int connectivity(const Graph& g);

/// kappa(g) >= k, computed with early exit (cheaper than full connectivity).
bool is_k_connected(const Graph& g, int k);

struct InducedHit {
    std::string pattern;
    std::vector<int> map;  // pattern vertex -> host vertex
};

/// Finds an induced copy of `pattern` in g (edges and non-edges both
/// preserved), or nullopt when none exists.
std::optional<InducedHit> find_induced(const Graph& g, const Graph& pattern,
                                       const std::string& name = "pattern");

/// Specialized induced-K_{1,3} test (hot path for catalog scans).
bool has_induced_claw(const Graph& g);

struct CutWitness {
    VertexSet cut;
    int components_after;
    int ratio_num;  // |S|
    int ratio_den;  // omega(G - S)

    bool ratio_below_one() const { return ratio_num < ratio_den; }
};

/// Requires s to be a cut set (omega(G - s) > 1); errors otherwise.
CutWitness cutset_ratio(const Graph& g, const VertexSet& s);

/// Some S with |S| <= max_size and |S|/omega(G-S) < 1, searched by
/// increasing size, or nullopt when none exists up to max_size.
std::optional<CutWitness> find_violating_cutset(const Graph& g, int max_size,
                                                const Deadline* dl = nullptr);

enum class LemmaCheck { Holds, Violated, HypothesisUnmet };

/// Claw-free independence bound: with g claw-free, i independent and x a
/// connected dominator of i, checks |i| <= |x| + 1. Unmet hypotheses are
/// reported as such, never as a violation.
LemmaCheck check_lemma_P(const Graph& g, const VertexSet& x, const VertexSet& i);

}  // namespace domcrit
