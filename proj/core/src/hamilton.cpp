#include "domcrit/hamilton.hpp"

#include <algorithm>
#include <bit>

#include "domcrit/solvers.hpp"
#include "domcrit/structure.hpp"

namespace domcrit {

namespace {

constexpr int kLongestCycleMaxN = 18;

struct Rows {
    int n;
    uint64_t all;
    std::array<uint64_t, 64> adj;

    explicit Rows(const Graph& g) : n(g.n()) {
        if (n > kMaxMaskVertices) throw TooLarge("hamilton: instance too large (n > 64)");
        all = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
        for (int v = 0; v < n; ++v) adj[v] = g.row64(v);
    }
};

bool mask_connected(const Rows& r, uint64_t inside) {
    if (!inside) return true;
    uint64_t seen = inside & -inside;
    for (;;) {
        uint64_t grow = 0;
        uint64_t scan = seen;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            grow |= r.adj[v];
        }
        uint64_t next = seen | (grow & inside);
        if (next == seen) break;
        seen = next;
    }
    return seen == inside;
}

// Propagates the edges forced by degree-2 vertices. Returns:
//   0  inconclusive (allowed[] possibly reduced)
//   1  Hamiltonian, cycle written to out
//  -1  non-Hamiltonian
int propagate_forced(const Rows& r, std::array<uint64_t, 64>& allowed,
                     std::array<uint64_t, 64>& forced, std::vector<int>* out) {
    int n = r.n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            int avail = std::popcount(allowed[v]);
            int forc = std::popcount(forced[v]);
            if (avail < 2 || forc > 2) return -1;
            if (avail == 2 && forced[v] != allowed[v]) {
                forced[v] = allowed[v];
                uint64_t scan = forced[v];
                while (scan) {
                    int w = std::countr_zero(scan);
                    scan &= scan - 1;
                    if (!(forced[w] & (1ull << v))) {
                        forced[w] |= 1ull << v;
                        changed = true;
                    }
                }
            }
            if (forc == 2 && allowed[v] != forced[v]) {
                uint64_t drop = allowed[v] & ~forced[v];
                allowed[v] = forced[v];
                uint64_t scan = drop;
                while (scan) {
                    int w = std::countr_zero(scan);
                    scan &= scan - 1;
                    allowed[w] &= ~(1ull << v);
                }
                changed = true;
            }
        }
    }
    // forced edges must not close a short cycle
    for (int v = 0; v < n; ++v) {
        if (std::popcount(forced[v]) != 2) continue;
        // walk the forced path/cycle through v
        std::vector<int> walk = {v};
        int prev = v, cur = std::countr_zero(forced[v]);
        while (cur != v) {
            walk.push_back(cur);
            uint64_t next = forced[cur] & ~(1ull << prev);
            if (std::popcount(forced[cur]) != 2 || !next) break;
            prev = cur;
            cur = std::countr_zero(next);
        }
        if (cur == v) {
            if (static_cast<int>(walk.size()) < n) return -1;
            if (out) *out = walk;
            return 1;
        }
    }
    return 0;
}

struct HamiltonSearch {
    const Rows& r;
    std::array<uint64_t, 64> adj;  // possibly reduced by forced-edge propagation
    int start = 0;
    std::vector<int> path;
    const Deadline* dl;
    long long nodes = 0;

    HamiltonSearch(const Rows& rows, const std::array<uint64_t, 64>& allowed, const Deadline* d)
        : r(rows), adj(allowed), dl(d) {}

    bool dfs(int end, uint64_t visited) {
        if ((++nodes & 2047) == 0) check_deadline(dl);
        if (visited == r.all) return (adj[end] >> start) & 1;
        uint64_t rest = r.all & ~visited;
        // connectivity prune: unvisited plus the active endpoint
        if (!mask_connected(r, rest | (1ull << end))) return false;
        // each unvisited vertex needs two usable cycle neighbors
        uint64_t usable = rest | (1ull << start) | (1ull << end);
        uint64_t scan = rest;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(adj[v] & usable) < 2) return false;
        }
        uint64_t cands = adj[end] & rest;
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            path.push_back(w);
            if (dfs(w, visited | (1ull << w))) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> is_hamiltonian(const Graph& g, const Deadline* dl) {
    int n = g.n();
    if (n < 3) return std::nullopt;
    Rows r(g);
    for (int v = 0; v < n; ++v)
        if (std::popcount(r.adj[v]) < 2) return std::nullopt;
    if (!mask_connected(r, r.all)) return std::nullopt;

    std::array<uint64_t, 64> allowed = r.adj;
    std::array<uint64_t, 64> forced{};
    std::vector<int> cycle;
    int verdict = propagate_forced(r, allowed, forced, &cycle);
    if (verdict == 1) return cycle;
    if (verdict == -1) return std::nullopt;

    // Hall-type certificate: an independent set larger than its neighborhood
    // cannot be threaded by any cycle.
    SolveResult mis = independence_number(g, dl);
    if (mis.defined() && *mis.value >= 2) {
        uint64_t nbhd = 0;
        for (int v : mis.witness) nbhd |= r.adj[v];
        nbhd &= ~mask_of(mis.witness, n);
        if (*mis.value > std::popcount(nbhd)) return std::nullopt;
    }

    // pick a start vertex of minimum remaining degree
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (std::popcount(allowed[v]) < std::popcount(allowed[start])) start = v;

    HamiltonSearch search(r, allowed, dl);
    search.start = start;
    search.path = {start};
    if (search.dfs(start, 1ull << start)) return search.path;
    return std::nullopt;
}

CycleOrientation::CycleOrientation(std::vector<int> cycle, int host_n)
    : order_(std::move(cycle)), pos_(host_n, -1) {
    for (size_t i = 0; i < order_.size(); ++i) {
        int v = order_[i];
        if (v < 0 || v >= host_n || pos_[v] >= 0)
            throw std::invalid_argument("CycleOrientation: not a simple cycle");
        pos_[v] = static_cast<int>(i);
    }
    if (order_.size() < 3) throw std::invalid_argument("CycleOrientation: cycle too short");
}

int CycleOrientation::at(int v) const {
    if (!contains(v)) throw std::invalid_argument("CycleOrientation: vertex not on cycle");
    return pos_[v];
}

int CycleOrientation::successor(int v, int i) const {
    int len = length();
    int idx = (at(v) + i) % len;
    if (idx < 0) idx += len;
    return order_[idx];
}

std::vector<int> CycleOrientation::segment(int u, int v) const {
    int pu = at(u), pv = at(v);
    int len = length();
    std::vector<int> out;
    for (int i = pu;; i = (i + 1) % len) {
        out.push_back(order_[i]);
        if (i == pv) break;
    }
    return out;
}

int CycleOrientation::segment_size(int u, int v) const {
    int len = length();
    return (at(v) - at(u) + len) % len + 1;
}

namespace {

// Longest cycle via subset DP: reach[S] holds the endpoints v of paths that
// start at min(S), cover S exactly, and end at v.
std::vector<int> longest_cycle_vertices(const Graph& g, const Deadline* dl) {
    int n = g.n();
    Rows r(g);
    std::vector<uint32_t> reach(static_cast<size_t>(1) << n, 0);
    for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;
    int best_len = 0;
    uint32_t best_set = 0;
    int best_end = -1;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        uint32_t ends = reach[s];
        if (!ends) continue;
        if ((s & 1023) == 0) check_deadline(dl);
        int anchor = std::countr_zero(s);
        int size = std::popcount(s);
        if (size >= 3 && size > best_len) {
            uint32_t closing = ends & static_cast<uint32_t>(r.adj[anchor]);
            if (closing) {
                best_len = size;
                best_set = s;
                best_end = std::countr_zero(closing);
            }
        }
        uint32_t scan = ends;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            uint32_t ext = static_cast<uint32_t>(r.adj[v]) & ~s;
            ext &= ~((1u << anchor) - 1);  // keep the anchor minimal
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                reach[s | (1u << w)] |= 1u << w;
            }
        }
    }
    if (best_len == 0) return {};
    // reconstruct one path anchor -> ... -> best_end inside best_set
    std::vector<int> cycle;
    uint32_t s = best_set;
    int v = best_end;
    int anchor = std::countr_zero(best_set);
    while (std::popcount(s) > 1) {
        cycle.push_back(v);
        uint32_t prev_s = s & ~(1u << v);
        uint32_t prevs = reach[prev_s] & static_cast<uint32_t>(r.adj[v]);
        v = std::countr_zero(prevs);
        s = prev_s;
    }
    cycle.push_back(anchor);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

CycleOrientation longest_cycle(const Graph& g, const Deadline* dl) {
    if (g.n() > kLongestCycleMaxN)
        throw TooLarge("longest_cycle: instance too large for exact search (n > 18)");
    if (!is_k_connected(g, 2))
        throw std::invalid_argument("longest_cycle: 2-connected input required");
    return CycleOrientation(longest_cycle_vertices(g, dl), g.n());
}

std::string cycle_lemma_name(CycleLemma lemma) {
    switch (lemma) {
        case CycleLemma::AttachmentNeighborsOffX: return "attachment-neighbors-off-X";
        case CycleLemma::NoOutsidePathInXPlus: return "no-outside-path-in-X+";
        case CycleLemma::AroundAttachmentChord: return "around-attachment-chord";
        case CycleLemma::ForbiddenChordsAbsent: return "forbidden-chords-absent";
        case CycleLemma::SegmentsAtLeastThree: return "segments-at-least-three";
    }
    return "?";
}

bool CycleLemmaReport::all_passed() const {
    for (const auto& c : components)
        for (const auto& s : c.lemmas)
            if (s.state == LemmaStatus::State::Fail) return false;
    return true;
}

namespace {

std::string vname(int v) { return std::to_string(v); }

// components of g minus the cycle, as vertex sets
std::vector<VertexSet> exterior_components(const Graph& g, const CycleOrientation& c) {
    std::vector<char> on_cycle(g.n(), 0);
    for (int v : c.order()) on_cycle[v] = 1;
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexSet> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (on_cycle[s] || seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.for_neighbors(v, [&](int w) {
                if (!on_cycle[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

CycleLemmaReport::ComponentCheck check_component(const Graph& g, const CycleOrientation& c,
                                                 const VertexSet& h,
                                                 const std::vector<VertexSet>& all_comps,
                                                 bool claw_free) {
    CycleLemmaReport::ComponentCheck out;
    out.component = h;

    std::vector<char> in_h(g.n(), 0);
    for (int v : h) in_h[v] = 1;
    std::vector<int> x;
    for (int v : c.order()) {
        bool hit = false;
        g.for_neighbors(v, [&](int w) { hit = hit || in_h[w]; });
        if (hit) x.push_back(v);  // cyclic order inherited from the orientation
    }
    out.attachments = x;
    int d = static_cast<int>(x.size());

    std::vector<char> in_x(g.n(), 0);
    for (int v : x) in_x[v] = 1;

    auto& lem = out.lemmas;
    auto fail = [&](CycleLemma which, const std::string& why) {
        auto& slot = lem[static_cast<size_t>(which)];
        if (slot.state != LemmaStatus::State::Fail) {
            slot.state = LemmaStatus::State::Fail;
            slot.violation = why;
        }
    };
    if (!claw_free) {
        lem[static_cast<size_t>(CycleLemma::AroundAttachmentChord)].state =
            LemmaStatus::State::NotApplicable;
        lem[static_cast<size_t>(CycleLemma::ForbiddenChordsAbsent)].state =
            LemmaStatus::State::NotApplicable;
        lem[static_cast<size_t>(CycleLemma::SegmentsAtLeastThree)].state =
            LemmaStatus::State::NotApplicable;
    }

    // X+ and X- avoid X
    for (int xi : x) {
        if (in_x[c.successor(xi)])
            fail(CycleLemma::AttachmentNeighborsOffX,
                 "successor of " + vname(xi) + " lies in X");
        if (in_x[c.predecessor(xi)])
            fail(CycleLemma::AttachmentNeighborsOffX,
                 "predecessor of " + vname(xi) + " lies in X");
    }

    // no edge or exterior path between two vertices of X+ (resp. X-)
    auto check_pairs = [&](bool plus) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                int u = plus ? c.successor(x[i]) : c.predecessor(x[i]);
                int v = plus ? c.successor(x[j]) : c.predecessor(x[j]);
                if (u == v) continue;
                const char* side = plus ? "X+" : "X-";
                if (g.adjacent(u, v))
                    fail(CycleLemma::NoOutsidePathInXPlus,
                         std::string(side) + " pair " + vname(u) + "," + vname(v) + " adjacent");
                for (const VertexSet& k : all_comps) {
                    bool hits_u = false, hits_v = false;
                    for (int w : k) {
                        hits_u = hits_u || g.adjacent(w, u);
                        hits_v = hits_v || g.adjacent(w, v);
                    }
                    if (hits_u && hits_v)
                        fail(CycleLemma::NoOutsidePathInXPlus,
                             std::string(side) + " pair " + vname(u) + "," + vname(v) +
                                 " joined through G-C");
                }
            }
    };
    check_pairs(true);
    check_pairs(false);

    if (claw_free) {
        for (int xi : x)
            if (!g.adjacent(c.successor(xi), c.predecessor(xi)))
                fail(CycleLemma::AroundAttachmentChord,
                     "x+x- missing at attachment " + vname(xi));

        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                int xi = x[i], xj = x[j];
                const std::pair<int, int> forbidden[] = {
                    {xi, c.successor(xj)},      {xi, c.successor(xj, 2)},
                    {c.successor(xi), c.successor(xj, 2)},
                    {xi, c.predecessor(xj)},    {xi, c.predecessor(xj, 2)},
                    {c.predecessor(xi), c.predecessor(xj, 2)},
                };
                for (auto [a, b] : forbidden)
                    if (a != b && g.adjacent(a, b))
                        fail(CycleLemma::ForbiddenChordsAbsent,
                             "chord " + vname(a) + "-" + vname(b) + " present (attachments " +
                                 vname(xi) + "," + vname(xj) + ")");
            }

        for (int i = 0; i < d; ++i) {
            int xi = x[i], xn = x[(i + 1) % d];
            if (xi == xn) continue;
            int size = c.segment_size(c.successor(xi), c.predecessor(xn));
            if (size < 3)
                fail(CycleLemma::SegmentsAtLeastThree,
                     "segment C[" + vname(c.successor(xi)) + "," + vname(c.predecessor(xn)) +
                         "] has size " + std::to_string(size));
        }
    }
    return out;
}

// all cycles of the given length, for strict mode (n <= 10)
void enumerate_cycles_of_length(const Graph& g, int len, std::vector<std::vector<int>>& out,
                                const Deadline* dl) {
    int n = g.n();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    long long ticks = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if ((++ticks & 4095) == 0) check_deadline(dl);
        if (static_cast<int>(path.size()) == len) {
            if (g.adjacent(v, path[0]) && path[1] < path.back()) out.push_back(path);
            return;
        }
        g.for_neighbors(v, [&](int w) {
            if (used[w] || w < path[0]) return;  // cycles start at their minimum vertex
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        });
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        path = {s};
        rec(rec, s);
        used[s] = 0;
    }
}

}  // namespace

CycleLemmaReport verify_cycle_lemmas(const Graph& g, bool strict, const Deadline* dl) {
    if (!is_k_connected(g, 2))
        throw std::invalid_argument("verify_cycle_lemmas: 2-connected input required");
    if (is_hamiltonian(g, dl))
        throw std::invalid_argument("verify_cycle_lemmas: Hamiltonian input");
    bool claw_free = !has_induced_claw(g);

    CycleOrientation c = longest_cycle(g, dl);
    std::vector<std::vector<int>> cycles = {c.order()};
    if (strict) {
        if (g.n() > 10)
            throw TooLarge("verify_cycle_lemmas: strict mode supports n <= 10");
        cycles.clear();
        enumerate_cycles_of_length(g, c.length(), cycles, dl);
    }

    CycleLemmaReport report;
    report.cycle = c.order();
    report.claw_lemmas_applicable = claw_free;
    report.cycles_checked = static_cast<int>(cycles.size());
    for (const auto& cyc : cycles) {
        CycleOrientation oriented(cyc, g.n());
        auto comps = exterior_components(g, oriented);
        for (const VertexSet& h : comps)
            report.components.push_back(check_component(g, oriented, h, comps, claw_free));
    }
    return report;
}

}  // namespace domcrit
