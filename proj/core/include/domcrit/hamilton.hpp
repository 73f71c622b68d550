#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/util.hpp"

namespace domcrit {

/// A Hamiltonian cycle as a vertex sequence (consecutive entries adjacent,
/// last adjacent to first), or nullopt when none exists. Exact; n <= 64.
std::optional<std::vector<int>> is_hamiltonian(const Graph& g, const Deadline* dl = nullptr);

/// Oriented cycle with successor/predecessor arithmetic and segment
/// extraction along the clockwise order.
class CycleOrientation {
public:
    CycleOrientation(std::vector<int> cycle, int host_n);

    int length() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    bool contains(int v) const { return v >= 0 && v < static_cast<int>(pos_.size()) && pos_[v] >= 0; }

    /// v^{i+} (i-th successor along the orientation); i may be negative.
    int successor(int v, int i = 1) const;
    int predecessor(int v, int i = 1) const { return successor(v, -i); }

    /// C[u, v]: vertices from u to v inclusive along the orientation.
    std::vector<int> segment(int u, int v) const;
    int segment_size(int u, int v) const;

private:
    std::vector<int> order_;
    std::vector<int> pos_;
    int at(int v) const;
};

/// Maximum-length cycle with an orientation. Exact for n <= 18 via dynamic
/// programming over vertex subsets; refuses larger instances (TooLarge).
/// Requires a 2-connected input (so a cycle exists).
CycleOrientation longest_cycle(const Graph& g, const Deadline* dl = nullptr);

enum class CycleLemma {
    AttachmentNeighborsOffX,      // X+ and X- avoid X
    NoOutsidePathInXPlus,         // no pair of X+ (or X-) joined by an edge or a G-C path
    AroundAttachmentChord,        // x+ x- is an edge, for every attachment x
    ForbiddenChordsAbsent,        // the six chord types between distinct attachments
    SegmentsAtLeastThree,         // |C[x_i+, x_{i+1}-]| >= 3
};

std::string cycle_lemma_name(CycleLemma lemma);

struct LemmaStatus {
    enum class State { Pass, Fail, NotApplicable } state = State::Pass;
    std::string violation;  // description of the violating tuple, if any
};

struct CycleLemmaReport {
    std::vector<int> cycle;  // the longest cycle checked
    struct ComponentCheck {
        VertexSet component;    // H, a component of G - C
        VertexSet attachments;  // X = N_C(H) in cyclic order
        std::array<LemmaStatus, 5> lemmas;
    };
    std::vector<ComponentCheck> components;
    int cycles_checked = 1;  // > 1 in strict mode

    bool all_passed() const;
    bool claw_lemmas_applicable = true;
};

/// Evaluates the five longest-cycle lemmas for every component of G - C.
/// Requires 2-connected non-Hamiltonian input; the three claw-free lemmas
/// are reported NotApplicable when g contains a claw. In strict mode every
/// longest cycle is checked (n <= 10).
CycleLemmaReport verify_cycle_lemmas(const Graph& g, bool strict = false,
                                     const Deadline* dl = nullptr);

}  // namespace domcrit
