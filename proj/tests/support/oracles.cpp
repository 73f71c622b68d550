#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

// all size-k subsets of 0..n-1
void subsets(int n, int k, const std::function<bool(const VertexSet&)>& visit) {
    VertexSet cur;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(cur.size()) == k) return visit(cur);
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(0);
}

bool connected_among(const Graph& g, const std::vector<char>& keep) {
    int n = g.n();
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (keep[v]) {
            if (start < 0) start = v;
            ++total;
        }
    if (total == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w = 0; w < n; ++w)
            if (keep[w] && !seen[w] && g.adjacent(v, w)) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == total;
}

}  // namespace

bool dominates(const Graph& g, const VertexSet& d) {
    for (int v = 0; v < g.n(); ++v) {
        bool covered = false;
        for (int w : d)
            if (w == v || g.adjacent(v, w)) covered = true;
        if (!covered) return false;
    }
    return true;
}

bool dominates_connected(const Graph& g, const VertexSet& d) {
    if (!dominates(g, d)) return false;
    std::vector<char> keep(g.n(), 0);
    for (int v : d) keep[v] = 1;
    return connected_among(g, keep);
}

bool dominates_total(const Graph& g, const VertexSet& d) {
    for (int v = 0; v < g.n(); ++v) {
        bool covered = false;
        for (int w : d)
            if (w != v && g.adjacent(v, w)) covered = true;
        if (!covered) return false;
    }
    return true;
}

bool independent(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

std::optional<int> gamma(const Graph& g) {
    for (int k = 0; k <= g.n(); ++k) {
        bool found = false;
        subsets(g.n(), k, [&](const VertexSet& s) { return found = dominates(g, s); });
        if (found) return k;
    }
    return std::nullopt;
}

std::optional<int> gamma_c(const Graph& g) {
    if (g.n() == 0) return 0;
    std::vector<char> all(g.n(), 1);
    if (!connected_among(g, all)) return std::nullopt;
    for (int k = 1; k <= g.n(); ++k) {
        bool found = false;
        subsets(g.n(), k, [&](const VertexSet& s) { return found = dominates_connected(g, s); });
        if (found) return k;
    }
    return std::nullopt;
}

std::optional<int> gamma_t(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int v = 0; v < g.n(); ++v) {
        bool iso = true;
        for (int w = 0; w < g.n(); ++w)
            if (g.adjacent(v, w)) iso = false;
        if (iso) return std::nullopt;
    }
    for (int k = 1; k <= g.n(); ++k) {
        bool found = false;
        subsets(g.n(), k, [&](const VertexSet& s) { return found = dominates_total(g, s); });
        if (found) return k;
    }
    return std::nullopt;
}

int alpha(const Graph& g) {
    for (int k = g.n(); k >= 1; --k) {
        bool found = false;
        subsets(g.n(), k, [&](const VertexSet& s) { return found = independent(g, s); });
        if (found) return k;
    }
    return 0;
}

int connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    std::vector<char> all(n, 1);
    if (!connected_among(g, all)) return 0;
    for (int k = 0; k <= n - 2; ++k) {
        bool found = false;
        subsets(n, k, [&](const VertexSet& s) {
            std::vector<char> keep(n, 1);
            for (int v : s) keep[v] = 0;
            int remaining = n - k;
            if (remaining <= 1) return false;
            return found = !connected_among(g, keep);
        });
        if (found) return k;
    }
    return n - 1;
}

bool hamiltonian(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    std::vector<char> used(n, 0);
    std::vector<int> path = {0};
    used[0] = 1;
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(path.size()) == n) return g.adjacent(path.back(), 0);
        for (int w = 0; w < n; ++w) {
            if (used[w] || !g.adjacent(path.back(), w)) continue;
            used[w] = 1;
            path.push_back(w);
            if (rec()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    return rec();
}

int longest_cycle_length(const Graph& g) {
    int n = g.n();
    int best = 0;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    std::function<void(int, int)> rec = [&](int start, int v) {
        if (static_cast<int>(path.size()) >= 3 && g.adjacent(v, start))
            best = std::max(best, static_cast<int>(path.size()));
        for (int w = start + 1; w < n; ++w) {  // cycles rooted at their minimum vertex
            if (used[w] || !g.adjacent(v, w)) continue;
            used[w] = 1;
            path.push_back(w);
            rec(start, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        path = {s};
        rec(s, s);
        used[s] = 0;
    }
    return best;
}

bool has_induced(const Graph& g, const Graph& pattern) {
    int np = pattern.n();
    std::vector<int> perm(np);
    bool found = false;
    subsets(g.n(), np, [&](const VertexSet& s) {
        for (int i = 0; i < np; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end());
        do {
            bool match = true;
            for (int i = 0; i < np && match; ++i)
                for (int j = i + 1; j < np && match; ++j)
                    if (pattern.adjacent(i, j) != g.adjacent(s[perm[i]], s[perm[j]]))
                        match = false;
            if (match) return found = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    });
    return found;
}

Graph closure(const Graph& g) {
    Graph h = g;
    for (;;) {
        int chosen = -1;
        for (int v = 0; v < h.n(); ++v) {
            VertexSet nb = domcrit::neighbors(h, v);
            if (nb.size() < 2) continue;
            bool complete = true;
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!h.adjacent(nb[i], nb[j])) complete = false;
            if (complete) continue;
            std::vector<char> keep(h.n(), 0);
            for (int w : nb) keep[w] = 1;
            if (!connected_among(h, keep)) continue;
            chosen = v;  // keep scanning: the last eligible vertex wins
        }
        if (chosen < 0) return h;
        VertexSet nb = domcrit::neighbors(h, chosen);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!h.adjacent(nb[i], nb[j])) h.set_edge(nb[i], nb[j]);
    }
}

}  // namespace oracle
