#include "domcrit/scan.hpp"

#include <atomic>
#include <thread>

#include "domcrit/closure.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/hamilton.hpp"
#include "domcrit/solvers.hpp"
#include "domcrit/structure.hpp"

namespace domcrit {

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::A: return "A";
        case TheoremId::M: return "M";
        case TheoremId::W: return "W";
        case TheoremId::Mike: return "mike";
        case TheoremId::Pumm: return "pumm";
        case TheoremId::ChSoundness: return "ch";
    }
    return "?";
}

TheoremId theorem_from_name(const std::string& name) {
    if (name == "A" || name == "a") return TheoremId::A;
    if (name == "M" || name == "m") return TheoremId::M;
    if (name == "W" || name == "w") return TheoremId::W;
    if (name == "mike") return TheoremId::Mike;
    if (name == "pumm") return TheoremId::Pumm;
    if (name == "ch" || name == "ch-soundness") return TheoremId::ChSoundness;
    throw std::invalid_argument("unknown theorem: " + name);
}

namespace {

// value == k and every admissible deletion drops below k
bool is_k_vertex_critical(const Graph& g, InvariantKind kind, int k, const Deadline* dl) {
    auto base = solve_within(g, kind, k, dl);
    if (!base || *base->value != k) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (kind == InvariantKind::GammaT && is_support_vertex(g, v)) continue;
        if (!solve_within(delete_vertex(g, v), kind, k - 1, dl)) return false;
    }
    return true;
}

GraphOutcome no_hit() { return {GraphOutcome::Status::NoHypothesis, ""}; }
GraphOutcome verified() { return {GraphOutcome::Status::Verified, ""}; }
GraphOutcome refuted(const std::string& why) {
    return {GraphOutcome::Status::Counterexample, why};
}

GraphOutcome eval_hamiltonicity_theorem(const Graph& g, InvariantKind kind, int connectivity_req,
                                        const std::vector<int>& orders, const Deadline* dl) {
    if (!is_k_connected(g, connectivity_req)) return no_hit();
    if (has_induced_claw(g)) return no_hit();
    bool hit = false;
    int hit_k = 0;
    for (int k : orders)
        if (is_k_vertex_critical(g, kind, k, dl)) {
            hit = true;
            hit_k = k;
            break;
        }
    if (!hit) return no_hit();
    if (is_hamiltonian(g, dl)) return verified();
    return refuted(std::to_string(hit_k) + "-" + invariant_name(kind) +
                   "-vertex-critical claw-free but non-Hamiltonian");
}

GraphOutcome eval_mike(const Graph& g, const Deadline* dl) {
    if (!is_k_connected(g, 2)) return no_hit();
    bool gc = is_k_vertex_critical(g, InvariantKind::GammaC, 4, dl);
    bool gt = is_k_vertex_critical(g, InvariantKind::GammaT, 4, dl);
    if (gc == gt) return verified();
    return refuted(std::string("4-gamma_c-vertex-critical: ") + (gc ? "yes" : "no") +
                   ", 4-gamma_t-vertex-critical: " + (gt ? "yes" : "no"));
}

GraphOutcome eval_pumm(const Graph& g, const Deadline* dl) {
    PummResult r = check_theorem_pumm(g, dl);
    if (r.outcome == PummResult::Outcome::HypothesisUnmet) return no_hit();
    if (r.trichotomy_holds()) return verified();
    return refuted(r.detail);
}

GraphOutcome eval_ch(const Graph& g, int max_cut_size, const Deadline* dl) {
    // cheaper order: look for a violating cut set first; only its presence
    // forces the Hamiltonicity question
    auto witness = find_violating_cutset(g, max_cut_size, dl);
    if (!witness) {
        if (is_hamiltonian(g, dl)) return verified();
        return no_hit();
    }
    if (is_hamiltonian(g, dl))
        return refuted("Hamiltonian but cut set of size " + std::to_string(witness->ratio_num) +
                       " leaves " + std::to_string(witness->ratio_den) + " components");
    return no_hit();
}

}  // namespace

GraphOutcome evaluate_theorem(TheoremId id, const Graph& g, const ScanConfig& cfg) {
    Deadline dl = Deadline::after(std::chrono::duration<double>(cfg.budget_seconds));
    const Deadline* d = cfg.budget_seconds > 0 ? &dl : nullptr;
    try {
        switch (id) {
            case TheoremId::A:
                return eval_hamiltonicity_theorem(g, InvariantKind::Gamma, 2, {3}, d);
            case TheoremId::M:
                return eval_hamiltonicity_theorem(g, InvariantKind::GammaC, 2, {3}, d);
            case TheoremId::W:
                return eval_hamiltonicity_theorem(g, InvariantKind::GammaC, 3, {4, 5}, d);
            case TheoremId::Mike: return eval_mike(g, d);
            case TheoremId::Pumm: return eval_pumm(g, d);
            case TheoremId::ChSoundness: return eval_ch(g, cfg.max_cut_size, d);
        }
    } catch (const Timeout&) {
        return {GraphOutcome::Status::Undecided, "time budget exhausted"};
    }
    return {GraphOutcome::Status::InputError, "unknown theorem"};
}

namespace {

struct LineTask {
    size_t index;
    std::string line;
};

GraphOutcome process_line(const std::string& line, const ScanConfig& cfg, std::string* g6_out) {
    Graph g;
    try {
        g = graph6_decode(line);
    } catch (const Graph6Error& e) {
        return {GraphOutcome::Status::InputError, e.what()};
    }
    if (g6_out) *g6_out = graph6_encode(g);
    return evaluate_theorem(cfg.theorem, g, cfg);
}

void tally(TheoremVerdict& verdict, size_t index, const std::string& g6,
           const GraphOutcome& outcome) {
    ++verdict.scanned;
    switch (outcome.status) {
        case GraphOutcome::Status::NoHypothesis: break;
        case GraphOutcome::Status::Verified: ++verdict.hypothesis_hits; break;
        case GraphOutcome::Status::Counterexample:
            ++verdict.hypothesis_hits;
            verdict.counterexamples.push_back({index, g6, outcome.reason});
            break;
        case GraphOutcome::Status::Undecided: ++verdict.undecided; break;
        case GraphOutcome::Status::InputError: ++verdict.input_errors; break;
    }
}

}  // namespace

TheoremVerdict scan_stream(std::istream& in, const ScanConfig& cfg,
                           const std::function<void(size_t, const std::string&,
                                                    const GraphOutcome&)>& row) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremVerdict verdict{cfg.theorem};

    size_t index = 0;
    std::string line;
    // skip offset lines (header lines do not count as input graphs)
    std::vector<LineTask> chunk;
    const size_t chunk_size = 256;
    std::vector<std::pair<std::string, GraphOutcome>> results;

    auto flush_chunk = [&]() {
        if (chunk.empty()) return;
        results.assign(chunk.size(), {});
        int jobs = std::max(1, cfg.jobs);
        if (jobs == 1 || chunk.size() == 1) {
            for (size_t i = 0; i < chunk.size(); ++i)
                results[i].second = process_line(chunk[i].line, cfg, &results[i].first);
        } else {
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= chunk.size()) return;
                    results[i].second = process_line(chunk[i].line, cfg, &results[i].first);
                }
            };
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs - 1; ++j) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
        }
        for (size_t i = 0; i < chunk.size(); ++i) {
            tally(verdict, chunk[i].index, results[i].first, results[i].second);
            if (row) row(chunk[i].index, results[i].first, results[i].second);
        }
        chunk.clear();
    };

    while (std::getline(in, line)) {
        if (line.empty() || line == ">>graph6<<") continue;
        size_t this_index = index++;
        if (this_index < cfg.offset) continue;
        chunk.push_back({this_index, line});
        if (chunk.size() >= chunk_size) flush_chunk();
    }
    flush_chunk();

    verdict.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

TheoremVerdict scan_graphs(const std::vector<Graph>& graphs, const ScanConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremVerdict verdict{cfg.theorem};
    int jobs = std::max(1, cfg.jobs);
    std::vector<GraphOutcome> outcomes(graphs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            outcomes[i] = evaluate_theorem(cfg.theorem, graphs[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs - 1; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < graphs.size(); ++i) {
        std::string g6;
        if (outcomes[i].status == GraphOutcome::Status::Counterexample)
            g6 = graph6_encode(graphs[i]);
        tally(verdict, i, g6, outcomes[i]);
    }
    verdict.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

}  // namespace domcrit
