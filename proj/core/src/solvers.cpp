#include "domcrit/solvers.hpp"

#include <array>
#include <bit>

namespace domcrit {

std::string invariant_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::Gamma: return "gamma";
        case InvariantKind::GammaC: return "gamma_c";
        case InvariantKind::GammaT: return "gamma_t";
        case InvariantKind::Alpha: return "alpha";
    }
    return "?";
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& x) {
    if (!valid_vertex_set(d, g.n()) || !valid_vertex_set(x, g.n()))
        throw std::invalid_argument("dominates: invalid vertex set");
    std::vector<char> covered(g.n(), 0);
    for (int v : d) {
        covered[v] = 1;
        g.for_neighbors(v, [&](int w) { covered[w] = 1; });
    }
    for (int v : x)
        if (!covered[v]) return false;
    return true;
}

bool dominates_connected(const Graph& g, const VertexSet& d, const VertexSet& x) {
    if (!dominates(g, d, x)) return false;
    return is_connected(induced_subgraph(g, d).graph);
}

bool dominates_total(const Graph& g, const VertexSet& d) {
    if (!valid_vertex_set(d, g.n()))
        throw std::invalid_argument("dominates_total: invalid vertex set");
    std::vector<char> covered(g.n(), 0);
    for (int v : d) g.for_neighbors(v, [&](int w) { covered[w] = 1; });
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) return false;
    return true;
}

namespace {

constexpr int kSolverMaxN = kMaxMaskVertices;

struct MaskGraph {
    int n;
    uint64_t all;
    std::array<uint64_t, 64> open;    // N(v)
    std::array<uint64_t, 64> closed;  // N[v]

    explicit MaskGraph(const Graph& g) : n(g.n()) {
        if (n > kSolverMaxN) throw TooLarge("solver: instance too large (n > 64)");
        all = n == 64 ? ~0ull : (1ull << n) - 1;
        for (int v = 0; v < n; ++v) {
            open[v] = g.row64(v);
            closed[v] = open[v] | (1ull << v);
        }
    }

    // connected within `inside`, starting from seed bits
    uint64_t reach(uint64_t seed, uint64_t inside) const {
        uint64_t r = seed & inside;
        for (;;) {
            uint64_t grow = 0;
            uint64_t scan = r;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= open[v];
            }
            uint64_t next = r | (grow & inside);
            if (next == r) return r;
            r = next;
        }
    }
};

struct BudgetCounter {
    const Deadline* dl;
    long long nodes = 0;
    void tick() {
        if (dl && (++nodes & 1023) == 0) check_deadline(dl);
    }
};

// Set-cover style search shared by gamma and gamma_t: branch on an uncovered
// vertex with the fewest allowed dominators, trying them lowest id first, and
// prune with ceil(uncovered / best coverage per pick).
struct DominationSearch {
    const MaskGraph& mg;
    bool total;  // coverage via open neighborhoods
    int best;    // strictly better solutions only
    uint64_t best_set = 0;
    bool found = false;
    BudgetCounter budget;

    DominationSearch(const MaskGraph& m, bool tot, int cap, const Deadline* dl)
        : mg(m), total(tot), best(cap + 1), budget{dl} {}

    uint64_t cover_of(int v) const { return total ? mg.open[v] : mg.closed[v]; }

    void dfs(uint64_t d, uint64_t covered, uint64_t excluded, int size) {
        budget.tick();
        if (covered == mg.all) {
            if (size < best) {
                best = size;
                best_set = d;
                found = true;
            }
            return;
        }
        if (size + 1 >= best) return;
        uint64_t uncovered = mg.all & ~covered;
        uint64_t allowed = mg.all & ~excluded & ~d;

        int maxcov = 0;
        uint64_t scan = allowed;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int c = std::popcount(cover_of(v) & uncovered);
            if (c > maxcov) maxcov = c;
        }
        if (maxcov == 0) return;
        int lb = size + (std::popcount(uncovered) + maxcov - 1) / maxcov;
        if (lb >= best) return;

        // branch vertex: uncovered vertex with fewest allowed dominators
        int pick = -1, pick_count = 65;
        scan = uncovered;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            int c = std::popcount((total ? mg.open[u] : mg.closed[u]) & allowed);
            if (c == 0) return;  // u can no longer be dominated
            if (c < pick_count) {
                pick_count = c;
                pick = u;
            }
        }
        uint64_t cands = (total ? mg.open[pick] : mg.closed[pick]) & allowed;
        uint64_t banned = 0;
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            dfs(d | (1ull << w), covered | cover_of(w), excluded | banned, size + 1);
            banned |= 1ull << w;
        }
    }
};

// Connected domination: grow D as a connected subgraph from each anchor
// (the anchor is the lowest id in D, so anchors partition the search space).
struct ConnectedDominationSearch {
    const MaskGraph& mg;
    int best;
    uint64_t best_set = 0;
    bool found = false;
    BudgetCounter budget;

    ConnectedDominationSearch(const MaskGraph& m, int cap, const Deadline* dl)
        : mg(m), best(cap + 1), budget{dl} {}

    void run() {
        for (int a = 0; a < mg.n; ++a) {
            if (1 >= best) break;
            uint64_t below = a == 0 ? 0 : ((1ull << a) - 1);
            dfs(1ull << a, mg.closed[a], below, 1);
        }
    }

    void dfs(uint64_t d, uint64_t covered, uint64_t excluded, int size) {
        budget.tick();
        if (covered == mg.all) {
            if (size < best) {
                best = size;
                best_set = d;
                found = true;
            }
            return;
        }
        if (size + 1 >= best) return;
        uint64_t uncovered = mg.all & ~covered;
        uint64_t allowed = mg.all & ~excluded & ~d;

        // every uncovered vertex must be dominated from D or from vertices
        // still reachable through allowed ones
        uint64_t reachable = mg.reach(d, allowed | d) & ~d;
        uint64_t scan = uncovered;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            if (!(mg.closed[u] & (d | reachable))) return;
        }

        int maxcov = 0;
        scan = reachable;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int c = std::popcount(mg.closed[v] & uncovered);
            if (c > maxcov) maxcov = c;
        }
        if (maxcov == 0) return;
        if (size + (std::popcount(uncovered) + maxcov - 1) / maxcov >= best) return;

        // frontier candidate with the best coverage gain, lowest id on ties
        uint64_t frontier = 0;
        scan = d;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            frontier |= mg.open[v];
        }
        frontier &= allowed;
        if (!frontier) return;
        int pick = -1, pick_cov = -1;
        scan = frontier;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int c = std::popcount(mg.closed[v] & uncovered);
            if (c > pick_cov) {
                pick_cov = c;
                pick = v;
            }
        }
        dfs(d | (1ull << pick), covered | mg.closed[pick], excluded, size + 1);
        dfs(d, covered, excluded | (1ull << pick), size);
    }
};

struct IndependenceSearch {
    const MaskGraph& mg;
    int best = -1;
    uint64_t best_set = 0;
    BudgetCounter budget;

    IndependenceSearch(const MaskGraph& m, const Deadline* dl) : mg(m), budget{dl} {}

    void dfs(uint64_t allowed, uint64_t chosen, int size) {
        budget.tick();
        // take isolated-in-allowed vertices greedily
        uint64_t scan = allowed;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (!(mg.open[v] & allowed)) {
                allowed &= ~(1ull << v);
                chosen |= 1ull << v;
                ++size;
            }
        }
        if (!allowed) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        if (size + std::popcount(allowed) <= best) return;
        // branch on a max-degree vertex inside allowed
        int pick = -1, pick_deg = -1;
        scan = allowed;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int dg = std::popcount(mg.open[v] & allowed);
            if (dg > pick_deg) {
                pick_deg = dg;
                pick = v;
            }
        }
        dfs(allowed & ~mg.closed[pick], chosen | (1ull << pick), size + 1);
        dfs(allowed & ~(1ull << pick), chosen, size);
    }
};

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

SolveResult undefined_result(InvariantKind kind) { return {kind, std::nullopt, {}, true}; }

}  // namespace

std::optional<SolveResult> solve_within(const Graph& g, InvariantKind kind, int cap,
                                        const Deadline* dl) {
    if (g.n() == 0) {
        if (kind == InvariantKind::Alpha || cap >= 0)
            return SolveResult{kind, 0, {}, true};
        return std::nullopt;
    }
    MaskGraph mg(g);
    switch (kind) {
        case InvariantKind::Gamma:
        case InvariantKind::GammaT: {
            if (kind == InvariantKind::GammaT && has_isolated_vertex(g)) return std::nullopt;
            DominationSearch s(mg, kind == InvariantKind::GammaT, cap, dl);
            s.dfs(0, 0, 0, 0);
            if (!s.found) return std::nullopt;
            return SolveResult{kind, s.best, set_of(s.best_set), true};
        }
        case InvariantKind::GammaC: {
            if (!is_connected(g)) return std::nullopt;
            ConnectedDominationSearch s(mg, cap, dl);
            s.run();
            if (!s.found) return std::nullopt;
            return SolveResult{kind, s.best, set_of(s.best_set), true};
        }
        case InvariantKind::Alpha: {
            // cap is ignored for the maximization problem
            IndependenceSearch s(mg, dl);
            s.dfs(mg.all, 0, 0);
            return SolveResult{kind, s.best, set_of(s.best_set), true};
        }
    }
    return std::nullopt;
}

SolveResult solve_invariant(const Graph& g, InvariantKind kind, const Deadline* dl) {
    auto r = solve_within(g, kind, g.n(), dl);
    if (!r) return undefined_result(kind);
    return *r;
}

SolveResult domination_number(const Graph& g, const Deadline* dl) {
    return solve_invariant(g, InvariantKind::Gamma, dl);
}
SolveResult connected_domination_number(const Graph& g, const Deadline* dl) {
    return solve_invariant(g, InvariantKind::GammaC, dl);
}
SolveResult total_domination_number(const Graph& g, const Deadline* dl) {
    return solve_invariant(g, InvariantKind::GammaT, dl);
}
SolveResult independence_number(const Graph& g, const Deadline* dl) {
    return solve_invariant(g, InvariantKind::Alpha, dl);
}

}  // namespace domcrit
