#include "smallgen.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace smallgen {

using domcrit::Graph;

const long long kAllGraphCounts[11] = {1,   1,    2,     4,      11,      34,
                                       156, 1044, 12346, 274668, 12005168};
const long long kConnectedGraphCounts[11] = {1,   1,   1,     2,      6,       21,
                                             112, 853, 11117, 261080, 11716571};

namespace {

constexpr int kMaxCanonN = 11;

inline int tri_index(int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
}

// Canonical labeling by color refinement plus individualization, taking the
// maximum packed adjacency string over the leaves of the search tree.
// Automorphisms discovered at equal-form leaves prune sibling branches.
struct Canonizer {
    int n;
    std::array<uint16_t, kMaxCanonN> adj;

    uint64_t best_form;
    std::array<int, kMaxCanonN> best_label;  // position -> vertex
    bool have_leaf;

    std::vector<std::array<int, kMaxCanonN>> automorphisms;  // vertex -> vertex
    std::array<int, kMaxCanonN> prefix;                      // individualized vertices
    int prefix_len;

    // union-find over vertices, valid for pruning at the root only
    std::array<int, kMaxCanonN> orbit;
    int find(int v) { return orbit[v] == v ? v : orbit[v] = find(orbit[v]); }
    void unite(int a, int b) { orbit[find(a)] = find(b); }

    uint64_t run(const uint16_t* rows, int count) {
        n = count;
        if (n > kMaxCanonN) throw std::invalid_argument("canonical_form: n > 11");
        if (n == 0) return 0;
        for (int v = 0; v < n; ++v) adj[v] = rows[v];
        best_form = 0;
        have_leaf = false;
        automorphisms.clear();
        prefix_len = 0;
        for (int v = 0; v < n; ++v) orbit[v] = v;

        std::array<uint64_t, kMaxCanonN> colors;
        for (int v = 0; v < n; ++v) colors[v] = 1;  // uniform start
        descend(colors, 0);
        return best_form;
    }

    // one refinement round; returns number of distinct colors
    int refine_round(std::array<uint64_t, kMaxCanonN>& colors) {
        std::array<uint64_t, kMaxCanonN> next;
        for (int v = 0; v < n; ++v) {
            uint64_t nb[kMaxCanonN];
            int cnt = 0;
            uint16_t row = adj[v];
            while (row) {
                int w = std::countr_zero(row);
                row &= static_cast<uint16_t>(row - 1);
                nb[cnt++] = colors[w];
            }
            // insertion sort; neighbor lists are tiny
            for (int i = 1; i < cnt; ++i) {
                uint64_t key = nb[i];
                int j = i - 1;
                while (j >= 0 && nb[j] > key) {
                    nb[j + 1] = nb[j];
                    --j;
                }
                nb[j + 1] = key;
            }
            uint64_t h = colors[v] * 0x9e3779b97f4a7c15ull + 0x100000001b3ull;
            for (int i = 0; i < cnt; ++i) h = (h ^ nb[i]) * 0x100000001b3ull;
            next[v] = h | 1;  // refined colors are odd; 0 marks individualization
        }
        colors = next;
        uint64_t seen[kMaxCanonN];
        int distinct = 0;
        for (int v = 0; v < n; ++v) {
            bool found = false;
            for (int i = 0; i < distinct && !found; ++i) found = seen[i] == colors[v];
            if (!found) seen[distinct++] = colors[v];
        }
        return distinct;
    }

    void refine(std::array<uint64_t, kMaxCanonN>& colors) {
        int distinct = 0;
        for (int round = 0; round < n; ++round) {
            int d = refine_round(colors);
            if (d == distinct || d == n) break;
            distinct = d;
        }
    }

    void handle_leaf(const std::array<uint64_t, kMaxCanonN>& colors) {
        std::array<int, kMaxCanonN> label;
        for (int v = 0; v < n; ++v) label[v] = v;
        std::sort(label.begin(), label.begin() + n,
                  [&](int a, int b) { return colors[a] < colors[b]; });
        uint64_t form = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (adj[label[i]] & (1u << label[j])) form |= 1ull << tri_index(i, j);
        if (!have_leaf || form > best_form) {
            best_form = form;
            best_label = label;
            have_leaf = true;
        } else if (form == best_form) {
            // positionwise map between the two labelings is an automorphism
            std::array<int, kMaxCanonN> sigma;
            bool identity = true;
            for (int p = 0; p < n; ++p) {
                sigma[best_label[p]] = label[p];
                if (best_label[p] != label[p]) identity = false;
            }
            if (!identity) {
                automorphisms.push_back(sigma);
                for (int v = 0; v < n; ++v) unite(v, sigma[v]);
            }
        }
    }

    bool aut_fixes_prefix(const std::array<int, kMaxCanonN>& sigma) const {
        for (int i = 0; i < prefix_len; ++i)
            if (sigma[prefix[i]] != prefix[i]) return false;
        return true;
    }

    void descend(std::array<uint64_t, kMaxCanonN> colors, int depth) {
        refine(colors);
        // target cell: smallest color value among non-singletons
        uint64_t target_color = 0;
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (colors[v] == colors[w]) {
                    if (!target_color || colors[v] < target_color) target_color = colors[v];
                    break;
                }
        if (!target_color) {
            handle_leaf(colors);
            return;
        }
        int tried[kMaxCanonN];
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target_color) continue;
            bool skip = false;
            if (depth == 0) {
                for (int i = 0; i < tried_count && !skip; ++i)
                    if (find(tried[i]) == find(v)) skip = true;
            } else {
                for (const auto& sigma : automorphisms) {
                    if (!aut_fixes_prefix(sigma)) continue;
                    for (int i = 0; i < tried_count && !skip; ++i)
                        if (sigma[tried[i]] == v) skip = true;
                    if (skip) break;
                }
            }
            if (!skip) {
                auto branched = colors;
                branched[v] = 0;  // unique smallest color individualizes v
                prefix[prefix_len++] = v;
                descend(branched, depth + 1);
                --prefix_len;
            }
            tried[tried_count++] = v;
        }
    }
};

thread_local Canonizer tl_canonizer;

std::array<uint16_t, kMaxCanonN> rows_of_form(uint64_t form, int n) {
    std::array<uint16_t, kMaxCanonN> rows{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (form & (1ull << tri_index(i, j))) {
                rows[i] |= static_cast<uint16_t>(1u << j);
                rows[j] |= static_cast<uint16_t>(1u << i);
            }
    return rows;
}

}  // namespace

uint64_t canonical_form(const Graph& g) {
    if (g.n() > kMaxCanonN) throw std::invalid_argument("canonical_form: n > 11");
    std::array<uint16_t, kMaxCanonN> rows{};
    for (int v = 0; v < g.n(); ++v) rows[v] = static_cast<uint16_t>(g.row64(v));
    return tl_canonizer.run(rows.data(), g.n());
}

Graph graph_of_form(uint64_t form, int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (form & (1ull << tri_index(i, j))) g.set_edge(i, j);
    return g;
}

uint64_t form_of_graph(const Graph& g) {
    if (g.n() > kMaxCanonN) throw std::invalid_argument("form_of_graph: n > 11");
    uint64_t form = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j)) form |= 1ull << tri_index(i, j);
    return form;
}

size_t Catalog::total() const {
    size_t t = 0;
    for (const auto& level : by_n) t += level.size();
    return t;
}

Catalog generate_all(int max_n, int jobs) {
    if (max_n < 1 || max_n > 10)
        throw std::invalid_argument("generate_all: max_n must be in 1..10");
    Catalog cat;
    cat.by_n.resize(max_n + 1);
    cat.by_n[1] = {0};

    for (int k = 1; k < max_n; ++k) {
        const std::vector<uint64_t>& parents = cat.by_n[k];
        std::unordered_set<uint64_t> seen;
        seen.reserve(static_cast<size_t>(kAllGraphCounts[k + 1] * 13 / 10));
        std::vector<uint64_t>& out = cat.by_n[k + 1];
        out.reserve(static_cast<size_t>(kAllGraphCounts[k + 1]));
        std::mutex sink_mutex;
        std::atomic<size_t> next{0};

        auto worker = [&]() {
            std::vector<uint64_t> local;
            local.reserve(1 << 13);
            auto drain = [&]() {
                std::lock_guard<std::mutex> lock(sink_mutex);
                for (uint64_t f : local)
                    if (seen.insert(f).second) out.push_back(f);
                local.clear();
            };
            for (;;) {
                size_t pi = next.fetch_add(1);
                if (pi >= parents.size()) break;
                auto base = rows_of_form(parents[pi], k);
                uint32_t subsets = 1u << k;
                for (uint32_t s = 0; s < subsets; ++s) {
                    auto rows = base;
                    rows[k] = static_cast<uint16_t>(s);
                    uint32_t bits = s;
                    while (bits) {
                        int v = std::countr_zero(bits);
                        bits &= bits - 1;
                        rows[v] |= static_cast<uint16_t>(1u << k);
                    }
                    local.push_back(tl_canonizer.run(rows.data(), k + 1));
                }
                if (local.size() >= (1u << 13)) drain();
            }
            drain();
        };

        int threads = std::max(1, jobs);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads - 1; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        std::sort(out.begin(), out.end());
    }
    return cat;
}

}  // namespace smallgen
