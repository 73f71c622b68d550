#include "domcrit/families.hpp"

#include <stdexcept>

namespace domcrit {

namespace {

struct Builder {
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    int vertex(const std::string& label) {
        labels.push_back(label);
        return static_cast<int>(labels.size()) - 1;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    void complete_on(const std::vector<int>& vs) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
    }
    LabeledGraph build() {
        return {Graph::from_edges(static_cast<int>(labels.size()), edges), labels};
    }
};

std::string sub1(const std::string& base, int i) { return base + std::to_string(i); }

std::string sub2(const std::string& base, int i, int j) {
    return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

int LabeledGraph::id_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("LabeledGraph: no vertex labeled " + label);
}

// Cycle b_1..b_k, each edge b_i b_{i+1} subdivided by a_{i+1} (b_k b_1 by a_1),
// the a-cycle then subdivided by c_i, and the c-cycle closed. 3k vertices, 5k edges.
LabeledGraph make_Gk(int k) {
    if (k < 3) throw std::invalid_argument("make_Gk: k >= 3 required");
    Builder b;
    std::vector<int> a(k), bb(k), c(k);
    for (int i = 0; i < k; ++i) a[i] = b.vertex(sub1("a", i + 1));
    for (int i = 0; i < k; ++i) bb[i] = b.vertex(sub1("b", i + 1));
    for (int i = 0; i < k; ++i) c[i] = b.vertex(sub1("c", i + 1));
    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        b.edge(bb[i], a[next]);   // b_i - a_{i+1}
        b.edge(a[next], bb[next]);
        b.edge(a[i], c[i]);       // a_i a_{i+1} subdivided by c_i
        b.edge(c[i], a[next]);
        b.edge(c[i], c[next]);
    }
    return b.build();
}

// H_l = K_l minus the cycle v_1..v_l; isolated v_{i,j} over pairs at cyclic
// distance >= 3, each adjacent to all of V(H_l) except v_i and v_j.
LabeledGraph make_Jl(int l) {
    if (l < 6) throw std::invalid_argument("make_Jl: l >= 6 required");
    Builder b;
    std::vector<int> v(l);
    for (int i = 0; i < l; ++i) v[i] = b.vertex(sub1("v", i + 1));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            int dist = std::min(j - i, l - (j - i));
            if (dist >= 2) b.edge(v[i], v[j]);  // K_l minus the Hamiltonian cycle
        }
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            int dist = std::min(j - i, l - (j - i));
            if (dist <= 2) continue;
            int vij = b.vertex(sub2("v", i, j));
            for (int m = 1; m <= l; ++m)
                if (m != i && m != j) b.edge(vij, v[m - 1]);
        }
    return b.build();
}

LabeledGraph make_Tl(int l) {
    if (l < 2) throw std::invalid_argument("make_Tl: l >= 2 required");
    Builder b;
    int u = b.vertex("u");
    std::array<std::vector<int>, 4> U;
    for (int i = 1; i <= 3; ++i) {
        U[i].resize(l);
        for (int j = 1; j <= l; ++j) U[i][j - 1] = b.vertex(sub2("u", i, j));
    }
    std::vector<int> y(4);
    for (int i = 0; i < 4; ++i) y[i] = b.vertex(sub1("y", i + 1));

    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < l; ++j) b.edge(u, U[i][j]);
    for (int j = 0; j < l; ++j) b.edge(y[0], U[1][j]);
    for (int j = 0; j < l; ++j) b.edge(y[1], U[2][j]);
    for (int i = 2; i <= 3; ++i)  // written with k in the source; l is meant
        for (int j = 0; j < l; ++j) b.edge(y[2], U[i][j]);
    for (int j = 0; j < l; ++j) b.edge(y[3], U[3][j]);
    b.edge(y[0], y[1]);
    b.edge(y[1], y[2]);
    b.edge(y[2], y[3]);
    b.edge(y[3], y[0]);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (i != j) {
                b.edge(U[1][i], U[2][j]);
                b.edge(U[1][i], U[3][j]);
            }
    return b.build();
}

// Three paths of length two with triangles on the first and last ranks.
LabeledGraph make_P333() {
    Builder b;
    std::vector<int> u(3), v(3), w(3);
    for (int i = 0; i < 3; ++i) u[i] = b.vertex(sub1("u", i + 1));
    for (int i = 0; i < 3; ++i) v[i] = b.vertex(sub1("v", i + 1));
    for (int i = 0; i < 3; ++i) w[i] = b.vertex(sub1("w", i + 1));
    for (int i = 0; i + 1 < 3; ++i) {
        b.edge(u[i], u[i + 1]);
        b.edge(v[i], v[i + 1]);
        b.edge(w[i], w[i + 1]);
    }
    b.complete_on({u[0], v[0], w[0]});
    b.complete_on({u[2], v[2], w[2]});
    return b.build();
}

// Three disjoint paths of lengths s_1,s_2,s_3 whose last vertices form a triangle.
LabeledGraph make_net(int s1, int s2, int s3) {
    if (s1 < 1 || s2 < 1 || s3 < 1) throw std::invalid_argument("make_net: s_i >= 1 required");
    Builder b;
    auto path = [&](const std::string& name, int len) {
        std::vector<int> p(len + 1);
        for (int i = 0; i <= len; ++i) p[i] = b.vertex(sub1(name, i + 1));
        for (int i = 0; i < len; ++i) b.edge(p[i], p[i + 1]);
        return p;
    };
    auto u = path("u", s1);
    auto v = path("v", s2);
    auto w = path("w", s3);
    b.complete_on({u.back(), v.back(), w.back()});
    return b.build();
}

LabeledGraph make_star(int n) {
    if (n < 1) throw std::invalid_argument("make_star: n >= 1 required");
    Builder b;
    int center = b.vertex("u");
    for (int i = 1; i <= n; ++i) b.edge(center, b.vertex(sub1("u", i)));
    return b.build();
}

LabeledGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n >= 3 required");
    Builder b;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = b.vertex(sub1("v", i + 1));
    for (int i = 0; i < n; ++i) b.edge(v[i], v[(i + 1) % n]);
    return b.build();
}

LabeledGraph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n >= 1 required");
    Builder b;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = b.vertex(sub1("v", i + 1));
    b.complete_on(v);
    return b.build();
}

// Five complete blocks; Q_1..Q_3 share q_i with Q_4 and z_i with Q_5.
LabeledGraph make_F1(const F1Spec& spec) {
    for (int q : spec.q)
        if (q < 3) throw std::invalid_argument("make_F1: block order >= 3 required");
    Builder b;
    std::vector<int> q(3), z(3);
    for (int i = 0; i < 3; ++i) q[i] = b.vertex(sub1("q", i + 1));
    for (int i = 0; i < 3; ++i) z[i] = b.vertex(sub1("z", i + 1));
    auto extras = [&](const std::string& block, int count) {
        std::vector<int> out;
        for (int i = 1; i <= count; ++i) out.push_back(b.vertex(block + "_" + std::to_string(i)));
        return out;
    };
    for (int i = 0; i < 3; ++i) {
        std::vector<int> block = {q[i], z[i]};
        for (int x : extras(sub1("Q", i + 1), spec.q[i] - 2)) block.push_back(x);
        b.complete_on(block);
    }
    std::vector<int> q4 = {q[0], q[1], q[2]};
    for (int x : extras("Q4", spec.q[3] - 3)) q4.push_back(x);
    b.complete_on(q4);
    std::vector<int> q5 = {z[0], z[1], z[2]};
    for (int x : extras("Q5", spec.q[4] - 3)) q5.push_back(x);
    b.complete_on(q5);
    return b.build();
}

// Triangles c_1c_2c_3 and f_1f_2f_3; c_i,f_i inside complete R_i (i <= 2),
// c_3 inside R_3 with r, plus the edge r f_3.
LabeledGraph make_F2(const F2Spec& spec) {
    if (spec.r[0] < 3 || spec.r[1] < 3)
        throw std::invalid_argument("make_F2: |R_1|,|R_2| >= 3 required");
    if (spec.r[2] < 2) throw std::invalid_argument("make_F2: |R_3| >= 2 required");
    Builder b;
    std::vector<int> c(3), f(3);
    for (int i = 0; i < 3; ++i) c[i] = b.vertex(sub1("c", i + 1));
    for (int i = 0; i < 3; ++i) f[i] = b.vertex(sub1("f", i + 1));
    int r = b.vertex("r");
    b.complete_on({c[0], c[1], c[2]});
    b.complete_on({f[0], f[1], f[2]});
    for (int i = 0; i < 2; ++i) {
        std::vector<int> block = {c[i], f[i]};
        for (int x = 1; x <= spec.r[i] - 2; ++x)
            block.push_back(b.vertex(sub1("R", i + 1) + "_" + std::to_string(x)));
        b.complete_on(block);
    }
    std::vector<int> r3 = {c[2], r};
    for (int x = 1; x <= spec.r[2] - 2; ++x)
        r3.push_back(b.vertex("R3_" + std::to_string(x)));
    b.complete_on(r3);
    b.edge(r, f[2]);
    return b.build();
}

// 6-cycle y_1..y_6 plus complete K holding w, w' with edges
// w y_1, w y_6, w' y_3, w' y_4.
LabeledGraph make_F3(const F3Spec& spec) {
    if (spec.k < 3) throw std::invalid_argument("make_F3: |K| >= 3 required");
    Builder b;
    std::vector<int> y(6);
    for (int i = 0; i < 6; ++i) y[i] = b.vertex(sub1("y", i + 1));
    int w = b.vertex("w");
    int wp = b.vertex("w'");
    std::vector<int> block = {w, wp};
    for (int x = 1; x <= spec.k - 2; ++x) block.push_back(b.vertex("K_" + std::to_string(x)));
    b.complete_on(block);
    for (int i = 0; i < 6; ++i) b.edge(y[i], y[(i + 1) % 6]);
    b.edge(w, y[0]);
    b.edge(w, y[5]);
    b.edge(wp, y[2]);
    b.edge(wp, y[3]);
    return b.build();
}

// Edge list read from the drawing; the caption's property claims are
// enforced by the acceptance suite, which fails loudly on a misreading.
LabeledGraph make_fig5() {
    Builder b;
    std::vector<int> v(9);
    for (int i = 0; i < 9; ++i) v[i] = b.vertex(sub1("v", i + 1));
    const int pairs[][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {4, 8}, {3, 6},
                            {3, 7}, {5, 6}, {6, 7}, {7, 8}, {9, 5}, {9, 8}};
    for (auto& p : pairs) b.edge(v[p[0] - 1], v[p[1] - 1]);
    return b.build();
}

LabeledGraph make_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> LabeledGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GkSpec>) return make_Gk(s.k);
            else if constexpr (std::is_same_v<T, JlSpec>) return make_Jl(s.l);
            else if constexpr (std::is_same_v<T, TlSpec>) return make_Tl(s.l);
            else if constexpr (std::is_same_v<T, P333Spec>) return make_P333();
            else if constexpr (std::is_same_v<T, NetSpec>) return make_net(s.s1, s.s2, s.s3);
            else if constexpr (std::is_same_v<T, StarSpec>) return make_star(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return make_cycle(s.n);
            else if constexpr (std::is_same_v<T, CompleteSpec>) return make_complete(s.n);
            else if constexpr (std::is_same_v<T, F1Spec>) return make_F1(s);
            else if constexpr (std::is_same_v<T, F2Spec>) return make_F2(s);
            else if constexpr (std::is_same_v<T, F3Spec>) return make_F3(s);
            else return make_fig5();
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GkSpec>) return "G" + std::to_string(s.k);
            else if constexpr (std::is_same_v<T, JlSpec>) return "J" + std::to_string(s.l);
            else if constexpr (std::is_same_v<T, TlSpec>) return "T" + std::to_string(s.l);
            else if constexpr (std::is_same_v<T, P333Spec>) return "P_{3,3,3}";
            else if constexpr (std::is_same_v<T, NetSpec>)
                return "N_{" + std::to_string(s.s1) + "," + std::to_string(s.s2) + "," +
                       std::to_string(s.s3) + "}";
            else if constexpr (std::is_same_v<T, StarSpec>)
                return "K_{1," + std::to_string(s.n) + "}";
            else if constexpr (std::is_same_v<T, CycleSpec>) return "C" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, CompleteSpec>) return "K" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, F1Spec>) return "F1";
            else if constexpr (std::is_same_v<T, F2Spec>) return "F2";
            else if constexpr (std::is_same_v<T, F3Spec>) return "F3";
            else return "Fig5";
        },
        spec);
}

}  // namespace domcrit
