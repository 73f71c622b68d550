#include "domcrit/structure.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "domcrit/solvers.hpp"

namespace domcrit {

namespace {

// Max internally-disjoint s-t paths, capped at `cap`, via unit-capacity
// augmenting paths on the vertex-split digraph (v_in = 2v, v_out = 2v+1).
int disjoint_paths(const Graph& g, int s, int t, int cap) {
    int n = g.n();
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add = [&](int a, int b, int c) {
        arcs[a].push_back({b, c, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (const Edge& e : g.edges()) {
        add(2 * e.u + 1, 2 * e.v, 1);
        add(2 * e.v + 1, 2 * e.u, 1);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> pv(2 * n), pe(2 * n);
    while (flow < cap) {
        std::fill(pv.begin(), pv.end(), -1);
        std::queue<int> q;
        q.push(source);
        pv[source] = source;
        while (!q.empty() && pv[sink] < 0) {
            int a = q.front();
            q.pop();
            for (size_t i = 0; i < arcs[a].size(); ++i) {
                const Arc& arc = arcs[a][i];
                if (arc.cap > 0 && pv[arc.to] < 0) {
                    pv[arc.to] = a;
                    pe[arc.to] = static_cast<int>(i);
                    q.push(arc.to);
                }
            }
        }
        if (pv[sink] < 0) break;
        for (int v = sink; v != source; v = pv[v]) {
            Arc& arc = arcs[pv[v]][pe[v]];
            --arc.cap;
            ++arcs[v][arc.rev].cap;
        }
        ++flow;
    }
    return flow;
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != g.n() - 1) return false;
    return true;
}

int components_of_mask(const Graph& g, uint64_t alive) {
    int comps = 0;
    while (alive) {
        ++comps;
        uint64_t seen = alive & -alive;
        for (;;) {
            uint64_t grow = 0;
            uint64_t scan = seen;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= g.row64(v);
            }
            uint64_t next = seen | (grow & alive);
            if (next == seen) break;
            seen = next;
        }
        alive &= ~seen;
    }
    return comps;
}

}  // namespace

int connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return n == 1 ? 0 : 0;
    if (!is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) best = std::min(best, disjoint_paths(g, s, t, best));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    int n = g.n();
    if (k <= 0) return true;
    if (n < k + 1) return false;
    if (k == 1) return is_connected(g);
    if (n <= kMaxMaskVertices && k <= 4) {
        // no removal of < k vertices may disconnect
        uint64_t all = g.full_mask64();
        if (components_of_mask(g, all) != 1) return false;
        for (int size = 1; size < k; ++size) {
            uint64_t sub = (1ull << size) - 1;
            uint64_t limit = n == 64 ? ~0ull : (1ull << n);
            while (sub < limit) {
                if (components_of_mask(g, all & ~sub) != 1) return false;
                sub = next_combination_bits(sub);
            }
        }
        return true;
    }
    return connectivity(g) >= k;
}

std::optional<InducedHit> find_induced(const Graph& g, const Graph& pattern,
                                       const std::string& name) {
    int np = pattern.n(), nh = g.n();
    if (np > nh) return std::nullopt;
    if (np == 0) return InducedHit{name, {}};

    // order pattern vertices: highest degree first, then most constrained
    // against already-placed ones
    std::vector<int> order;
    std::vector<char> placed(np, 0);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int p = 0; p < np; ++p) {
            if (placed[p]) continue;
            int links = 0;
            for (int q : order)
                if (pattern.adjacent(p, q)) ++links;
            int deg = pattern.degree(p);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = p;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> map(np, -1);
    std::vector<char> used(nh, 0);
    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size()) return true;
        int p = order[depth];
        for (int h = 0; h < nh; ++h) {
            if (used[h] || g.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d)
                if (pattern.adjacent(p, order[d]) != g.adjacent(h, map[order[d]])) ok = false;
            if (!ok) continue;
            map[p] = h;
            used[h] = 1;
            if (self(self, depth + 1)) return true;
            map[p] = -1;
            used[h] = 0;
        }
        return false;
    };
    if (dfs(dfs, 0)) return InducedHit{name, map};
    return std::nullopt;
}

bool has_induced_claw(const Graph& g) {
    int n = g.n();
    if (n <= kMaxMaskVertices) {
        // claw at v = independent triple inside N(v)
        for (int v = 0; v < n; ++v) {
            uint64_t nb = g.row64(v);
            if (std::popcount(nb) < 3) continue;
            uint64_t a_scan = nb;
            while (a_scan) {
                int a = std::countr_zero(a_scan);
                a_scan &= a_scan - 1;  // remaining bits are > a
                uint64_t b_scan = a_scan & ~g.row64(a);
                while (b_scan) {
                    int b = std::countr_zero(b_scan);
                    b_scan &= b_scan - 1;  // remaining: > b, non-adjacent to a
                    if (b_scan & ~g.row64(b)) return true;
                }
            }
        }
        return false;
    }
    Graph claw(4);
    claw.set_edge(0, 1);
    claw.set_edge(0, 2);
    claw.set_edge(0, 3);
    return find_induced(g, claw, "K_{1,3}").has_value();
}

CutWitness cutset_ratio(const Graph& g, const VertexSet& s) {
    if (!valid_vertex_set(s, g.n()))
        throw std::invalid_argument("cutset_ratio: invalid vertex set");
    int omega = component_count_minus(g, s);
    if (omega <= 1) throw std::invalid_argument("cutset_ratio: s is not a cut set");
    return {s, omega, static_cast<int>(s.size()), omega};
}

std::optional<CutWitness> find_violating_cutset(const Graph& g, int max_size,
                                                const Deadline* dl) {
    int n = g.n();
    if (max_size > n - 2) max_size = n - 2;
    long long ticks = 0;
    if (n <= kMaxMaskVertices) {
        uint64_t all = g.full_mask64();
        for (int size = 1; size <= max_size; ++size) {
            uint64_t sub = (1ull << size) - 1;
            uint64_t limit = n == 64 ? ~0ull : (1ull << n);
            while (sub < limit) {
                if (((++ticks) & 1023) == 0) check_deadline(dl);
                int omega = components_of_mask(g, all & ~sub);
                if (omega > size) return CutWitness{set_of(sub), omega, size, omega};
                sub = next_combination_bits(sub);
            }
        }
        return std::nullopt;
    }
    // general path: recursive subset enumeration by increasing size
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int want) -> std::optional<CutWitness> {
        if (want == 0) {
            if (((++ticks) & 255) == 0) check_deadline(dl);
            int omega = component_count_minus(g, chosen);
            if (omega > static_cast<int>(chosen.size()))
                return CutWitness{chosen, omega, static_cast<int>(chosen.size()), omega};
            return std::nullopt;
        }
        for (int v = start; v <= n - want; ++v) {
            chosen.push_back(v);
            if (auto w = self(self, v + 1, want - 1)) return w;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    for (int size = 1; size <= max_size; ++size)
        if (auto w = rec(rec, 0, size)) return w;
    return std::nullopt;
}

LemmaCheck check_lemma_P(const Graph& g, const VertexSet& x, const VertexSet& i) {
    if (!valid_vertex_set(x, g.n()) || !valid_vertex_set(i, g.n()))
        throw std::invalid_argument("check_lemma_P: invalid vertex set");
    if (has_induced_claw(g)) return LemmaCheck::HypothesisUnmet;
    for (size_t a = 0; a < i.size(); ++a)
        for (size_t b = a + 1; b < i.size(); ++b)
            if (g.adjacent(i[a], i[b])) return LemmaCheck::HypothesisUnmet;
    if (x.empty() || !is_connected(induced_subgraph(g, x).graph))
        return LemmaCheck::HypothesisUnmet;
    if (!dominates(g, x, i)) return LemmaCheck::HypothesisUnmet;
    return i.size() <= x.size() + 1 ? LemmaCheck::Holds : LemmaCheck::Violated;
}

}  // namespace domcrit
