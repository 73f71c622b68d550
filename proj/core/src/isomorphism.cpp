#include "domcrit/isomorphism.hpp"

#include <algorithm>
#include <cstdint>

namespace domcrit {

namespace {

// Iteratively refine vertex colors by hashing the sorted multiset of
// neighbor colors (1-dimensional Weisfeiler-Leman). Returns per-vertex
// colors normalized to small ints so the two graphs can be compared.
std::vector<int> refined_colors(const Graph& g, int rounds) {
    int n = g.n();
    std::vector<uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = static_cast<uint64_t>(g.degree(v));
    std::vector<uint64_t> next(n);
    for (int r = 0; r < rounds; ++r) {
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> nb;
            g.for_neighbors(v, [&](int w) { nb.push_back(color[w]); });
            std::sort(nb.begin(), nb.end());
            uint64_t h = color[v] * 1000003u + 0x9e3779b97f4a7c15ull;
            for (uint64_t c : nb) h = h * 0x100000001b3ull ^ (c + 0x517cc1b727220a95ull);
            next[v] = h;
        }
        color = next;
    }
    // normalize
    std::vector<uint64_t> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), color[v]) -
                                  sorted.begin());
    return out;
}

long long triangle_count(const Graph& g) {
    long long t = 0;
    auto es = g.edges();
    for (const Edge& e : es)
        for (int w = 0; w < g.n(); ++w)
            if (w != e.u && w != e.v && g.adjacent(e.u, w) && g.adjacent(e.v, w)) ++t;
    return t / 3;
}

struct Backtracker {
    const Graph& g1;
    const Graph& g2;
    const std::vector<int>& c1;
    const std::vector<int>& c2;
    std::vector<int> map;    // g1 -> g2, -1 unset
    std::vector<char> used;  // g2 vertex taken
    std::vector<int> order;  // g1 vertices, most-constrained first

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int w = 0; w < g2.n(); ++w) {
            if (used[w] || c1[u] != c2[w]) continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int p = order[d];
                if (g1.adjacent(u, p) != g2.adjacent(w, map[p])) ok = false;
            }
            if (!ok) continue;
            map[u] = w;
            used[w] = 1;
            if (extend(depth + 1)) return true;
            map[u] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count())
        return {IsoResult::Outcome::SizeMismatch, {}};
    int n = g1.n();
    if (n == 0) return {IsoResult::Outcome::Isomorphic, {}};

    std::vector<int> d1(n), d2(n);
    for (int v = 0; v < n; ++v) {
        d1[v] = g1.degree(v);
        d2[v] = g2.degree(v);
    }
    std::vector<int> s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {IsoResult::Outcome::DegreeMismatch, {}};

    if (triangle_count(g1) != triangle_count(g2))
        return {IsoResult::Outcome::InvariantMismatch, {}};

    auto c1 = refined_colors(g1, 3);
    auto c2 = refined_colors(g2, 3);
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return {IsoResult::Outcome::InvariantMismatch, {}};

    Backtracker bt{g1, g2, c1, c2, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
    bt.order.resize(n);
    for (int v = 0; v < n; ++v) bt.order[v] = v;
    // rarest color class first, high degree first within a class
    std::vector<int> freq(n, 0);
    for (int v = 0; v < n; ++v) ++freq[c1[v]];
    std::sort(bt.order.begin(), bt.order.end(), [&](int a, int b) {
        if (freq[c1[a]] != freq[c1[b]]) return freq[c1[a]] < freq[c1[b]];
        if (d1[a] != d1[b]) return d1[a] > d1[b];
        return a < b;
    });

    if (bt.extend(0)) return {IsoResult::Outcome::Isomorphic, bt.map};
    return {IsoResult::Outcome::Exhausted, {}};
}

}  // namespace domcrit
