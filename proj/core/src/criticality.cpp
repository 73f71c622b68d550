#include "domcrit/criticality.hpp"

#include <array>
#include <bit>

namespace domcrit {

namespace {

VertexSet remap_after_deletion(const VertexSet& s, int deleted) {
    VertexSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(v < deleted ? v : v + 1);
    return out;
}

bool kind_supported(InvariantKind kind) {
    return kind == InvariantKind::Gamma || kind == InvariantKind::GammaC ||
           kind == InvariantKind::GammaT;
}

}  // namespace

bool is_support_vertex(const Graph& g, int v) {
    bool support = false;
    g.for_neighbors(v, [&](int w) { support = support || g.degree(w) == 1; });
    return support;
}

CriticalityReport check_vertex_critical(const Graph& g, InvariantKind kind, int k,
                                        const Deadline* dl) {
    if (!kind_supported(kind))
        throw std::invalid_argument("check_vertex_critical: gamma/gamma_c/gamma_t only");
    if (!is_connected(g))
        throw std::invalid_argument("check_vertex_critical: connected input required");

    CriticalityReport report{kind, false, k, true, {}, {}, std::nullopt};
    SolveResult base = solve_invariant(g, kind, dl);
    if (!base.defined() || *base.value != k) {
        report.critical = false;
        report.violation = {{-1,
                             {-1, -1},
                             "base " + invariant_name(kind) + " is " +
                                 (base.defined() ? std::to_string(*base.value) : "undefined") +
                                 ", expected " + std::to_string(k)}};
        return report;
    }

    for (int v = 0; v < g.n(); ++v) {
        if (kind == InvariantKind::GammaT && is_support_vertex(g, v)) continue;
        Graph h = delete_vertex(g, v);
        auto dropped = solve_within(h, kind, k - 1, dl);
        if (!dropped) {
            report.critical = false;
            report.violation = {{v,
                                 {-1, -1},
                                 invariant_name(kind) + "(G - " + std::to_string(v) +
                                     ") does not drop below " + std::to_string(k)}};
            return report;
        }
        report.vertex_witnesses[v] = remap_after_deletion(dropped->witness, v);
    }
    return report;
}

CriticalityReport check_vertex_critical_auto(const Graph& g, InvariantKind kind,
                                             const Deadline* dl) {
    SolveResult base = solve_invariant(g, kind, dl);
    if (!base.defined())
        throw std::invalid_argument("check_vertex_critical_auto: base invariant undefined");
    return check_vertex_critical(g, kind, *base.value, dl);
}

CriticalityReport check_edge_critical(const Graph& g, InvariantKind kind, int k,
                                      const Deadline* dl) {
    if (kind != InvariantKind::Gamma && kind != InvariantKind::GammaC)
        throw std::invalid_argument("check_edge_critical: gamma and gamma_c flavors only");
    if (!is_connected(g))
        throw std::invalid_argument("check_edge_critical: connected input required");
    int n = g.n();
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) throw std::invalid_argument("check_edge_critical: complete input");

    CriticalityReport report{kind, true, k, true, {}, {}, std::nullopt};
    SolveResult base = solve_invariant(g, kind, dl);
    if (!base.defined() || *base.value != k) {
        report.critical = false;
        report.violation = {{-1,
                             {-1, -1},
                             "base " + invariant_name(kind) + " is " +
                                 (base.defined() ? std::to_string(*base.value) : "undefined") +
                                 ", expected " + std::to_string(k)}};
        return report;
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            Graph h = add_edge(g, u, v);
            auto dropped = solve_within(h, kind, k - 1, dl);
            if (!dropped) {
                report.critical = false;
                report.violation = {{-1,
                                     {u, v},
                                     invariant_name(kind) + "(G + " + std::to_string(u) + "-" +
                                         std::to_string(v) + ") does not drop below " +
                                         std::to_string(k)}};
                return report;
            }
            report.edge_witnesses[{u, v}] = dropped->witness;
        }
    return report;
}

namespace {

// every minimum dominating set of h (size known) via subset enumeration
template <typename F>
void for_each_minimum_dominating_set(const Graph& h, int size, F&& f) {
    int n = h.n();
    if (n > kMaxMaskVertices) throw TooLarge("verify_Dv_facts: exhaustive mode needs n <= 64");
    std::array<uint64_t, 64> closed{};
    for (int v = 0; v < n; ++v) closed[v] = h.row64(v) | (1ull << v);
    uint64_t all = h.full_mask64();
    if (size == 0) {
        if (all == 0) f(VertexSet{});
        return;
    }
    uint64_t sub = (1ull << size) - 1;
    uint64_t limit = n == 64 ? ~0ull : (1ull << n);
    while (sub < limit) {
        uint64_t covered = 0;
        uint64_t scan = sub;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            covered |= closed[v];
        }
        if (covered == all) f(set_of(sub));
        sub = next_combination_bits(sub);
    }
}

}  // namespace

DvFactsReport verify_Dv_facts(const Graph& g, InvariantKind kind, int k, bool exhaustive,
                              const Deadline* dl) {
    if (kind != InvariantKind::Gamma && kind != InvariantKind::GammaC)
        throw std::invalid_argument("verify_Dv_facts: gamma and gamma_c flavors only");
    CriticalityReport crit = check_vertex_critical(g, kind, k, dl);
    if (!crit.critical)
        throw std::invalid_argument("verify_Dv_facts: input not " + std::to_string(k) + "-" +
                                    invariant_name(kind) + "-vertex-critical");
    if (exhaustive && g.n() > 10)
        throw TooLarge("verify_Dv_facts: exhaustive mode supports n <= 10");

    DvFactsReport report;
    report.exhaustive = exhaustive;
    for (int v = 0; v < g.n(); ++v) {
        DvFactsReport::Entry entry{v, true, true, ""};
        Graph h = delete_vertex(g, v);
        if (kind == InvariantKind::Gamma) {
            SolveResult exact = solve_invariant(h, kind, dl);
            if (!exact.defined() || *exact.value != k - 1) {
                entry.size_ok = false;
                entry.detail = "gamma(G - v) = " +
                               (exact.defined() ? std::to_string(*exact.value) : "undefined");
            }
            auto check_set = [&](const VertexSet& dv_original) {
                for (int w : dv_original)
                    if (g.adjacent(v, w)) {
                        entry.adjacency_ok = false;
                        entry.detail = "D_v member " + std::to_string(w) + " adjacent to v";
                    }
            };
            if (exhaustive && exact.defined()) {
                for_each_minimum_dominating_set(h, *exact.value, [&](const VertexSet& dv) {
                    check_set(remap_after_deletion(dv, v));
                });
            } else {
                check_set(crit.vertex_witnesses.at(v));
            }
        } else {
            SolveResult exact = solve_invariant(h, kind, dl);
            if (!exact.defined() || *exact.value != k - 1) {
                entry.size_ok = false;
                entry.detail = invariant_name(kind) + "(G - v) = " +
                               (exact.defined() ? std::to_string(*exact.value) : "undefined");
            }
        }
        if (!entry.size_ok || !entry.adjacency_ok) report.all_pass = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace domcrit
