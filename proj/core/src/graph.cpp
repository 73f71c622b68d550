#include "domcrit/graph.hpp"

#include <algorithm>

namespace domcrit {

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const uint64_t* row = &bits_[static_cast<size_t>(v) * stride_];
    for (int w = 0; w < stride_; ++w) d += __builtin_popcountll(row[w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_neighbors(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexSet neighbors(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("neighbors: vertex id out of range");
    VertexSet out;
    g.for_neighbors(v, [&](int w) { out.push_back(w); });
    return out;
}

bool valid_vertex_set(const VertexSet& s, int n) {
    int prev = -1;
    for (int v : s) {
        if (v <= prev || v >= n) return false;
        prev = v;
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!valid_vertex_set(s, g.n()))
        throw std::invalid_argument("induced_subgraph: invalid vertex set");
    InducedSubgraph out;
    out.old_of_new = s;
    out.new_of_old.assign(g.n(), -1);
    for (size_t i = 0; i < s.size(); ++i) out.new_of_old[s[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
    out.graph = std::move(h);
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("delete_vertex: vertex id out of range");
    VertexSet keep;
    keep.reserve(g.n() - 1);
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep).graph;
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (g.adjacent(u, v)) throw std::invalid_argument("add_edge: edge already present");
    Graph h = g;
    h.set_edge(u, v);
    return h;
}

std::pair<Graph, int> subdivide_edge(const Graph& g, const Edge& e) {
    if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("subdivide_edge: edge absent");
    Graph h(g.n() + 1);
    for (const Edge& f : g.edges())
        if (!(f == e)) h.set_edge(f.u, f.v);
    int w = g.n();
    h.set_edge(e.u, w);
    h.set_edge(w, e.v);
    return {std::move(h), w};
}

namespace {

// BFS over vertices marked alive; returns number of components.
int components_impl(const Graph& g, const std::vector<char>& alive) {
    int n = g.n();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.for_neighbors(v, [&](int w) {
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
    }
    return comps;
}

}  // namespace

int component_count(const Graph& g) {
    return components_impl(g, std::vector<char>(g.n(), 1));
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return component_count(g) == 1;
}

int component_count_minus(const Graph& g, const VertexSet& s) {
    if (!valid_vertex_set(s, g.n()))
        throw std::invalid_argument("component_count_minus: invalid vertex set");
    std::vector<char> alive(g.n(), 1);
    for (int v : s) alive[v] = 0;
    return components_impl(g, alive);
}

uint64_t mask_of(const VertexSet& s, int n) {
    if (n > kMaxMaskVertices) throw std::logic_error("mask_of: n too large for mask path");
    if (!valid_vertex_set(s, n)) throw std::invalid_argument("mask_of: invalid vertex set");
    uint64_t m = 0;
    for (int v : s) m |= 1ull << v;
    return m;
}

VertexSet set_of(uint64_t mask) {
    VertexSet s;
    while (mask) {
        s.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace domcrit
