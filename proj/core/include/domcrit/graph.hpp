#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domcrit {

/// Largest vertex count the general representation supports.
inline constexpr int kMaxVertices = 512;

/// Largest vertex count the bit-mask fast path (row64) supports.
inline constexpr int kMaxMaskVertices = 64;

using VertexSet = std::vector<int>;  // sorted ascending, no duplicates

struct Edge {
    int u, v;  // normalized u < v
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: self-loop");
    }
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Simple undirected graph on dense ids 0..n-1. Adjacency is stored as packed
// bit rows; for n <= 64 each row is a single word (row64), which is the hot
// path for the exponential solvers. Values are immutable after construction:
// every mutation below returns a new graph.
class Graph {
public:
    Graph() : n_(0), stride_(1) {}

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
        stride_ = n <= 64 ? 1 : (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n) * stride_, 0);
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const Edge& e : edges) g.set_edge(e.u, e.v);
        return g;
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const;
    int edge_count() const;
    std::vector<Edge> edges() const;

    /// Adjacency row as a single word; requires n <= 64.
    uint64_t row64(int v) const {
        if (n_ > kMaxMaskVertices)
            throw std::logic_error("Graph::row64: graph too large for mask path");
        return bits_[static_cast<size_t>(v)];
    }

    uint64_t full_mask64() const {
        if (n_ > kMaxMaskVertices)
            throw std::logic_error("Graph::full_mask64: graph too large for mask path");
        return n_ == 64 ? ~0ull : (1ull << n_) - 1;
    }

    template <typename F>
    void for_neighbors(int v, F&& f) const {
        const uint64_t* row = &bits_[static_cast<size_t>(v) * stride_];
        for (int w = 0; w < stride_; ++w) {
            uint64_t word = row[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f((w << 6) + b);
                word &= word - 1;
            }
        }
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    // In-place edge setter for builders; honors the no-self-loop invariant.
    void set_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
    }

    void clear_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] &= ~(1ull << (v & 63));
        bits_[static_cast<size_t>(v) * stride_ + (u >> 6)] &= ~(1ull << (u & 63));
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }

    int n_;
    int stride_;
    std::vector<uint64_t> bits_;
};

/// N_G(v); never contains v.
VertexSet neighbors(const Graph& g, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new id -> old id
    std::vector<int> new_of_old;  // old id -> new id, -1 if dropped
};

/// G[S] with the id remapping used.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Deletes v; ids above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

/// Adds edge uv; errors if already present.
Graph add_edge(const Graph& g, int u, int v);

/// Replaces uv by u-w, w-v with fresh w = n; errors if uv absent.
std::pair<Graph, int> subdivide_edge(const Graph& g, const Edge& e);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Component count of G - S without materializing the subgraph.
int component_count_minus(const Graph& g, const VertexSet& s);

// VertexSet / mask helpers (mask paths require n <= 64).
uint64_t mask_of(const VertexSet& s, int n);
VertexSet set_of(uint64_t mask);
bool valid_vertex_set(const VertexSet& s, int n);

}  // namespace domcrit
