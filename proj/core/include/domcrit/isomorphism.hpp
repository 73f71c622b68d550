#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct IsoResult {
    enum class Outcome {
        Isomorphic,        // mapping holds a bijection g1 -> g2
        SizeMismatch,      // |V| or |E| differ
        DegreeMismatch,    // degree multisets differ
        InvariantMismatch, // triangle counts or refined degree profiles differ
        Exhausted,         // backtracking searched everything, no bijection
    };
    Outcome outcome;
    std::vector<int> mapping;  // only for Isomorphic

    bool isomorphic() const { return outcome == Outcome::Isomorphic; }
};

/// Decides isomorphism by degree-refinement backtracking and returns a
/// witness bijection or the invariant that certified the mismatch.
IsoResult is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace domcrit
