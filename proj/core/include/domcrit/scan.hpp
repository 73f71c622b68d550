#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/util.hpp"

namespace domcrit {

enum class TheoremId { A, M, W, Mike, Pumm, ChSoundness };

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);  // throws on unknown

struct ScanConfig {
    TheoremId theorem = TheoremId::A;
    int jobs = 1;
    double budget_seconds = 10.0;  // per graph; exhaustion reports "undecided"
    bool strict = false;
    int max_cut_size = 4;  // Ch soundness
    size_t offset = 0;     // input lines to skip
};

struct GraphOutcome {
    enum class Status { NoHypothesis, Verified, Counterexample, Undecided, InputError };
    Status status = Status::NoHypothesis;
    std::string reason;
};

struct Counterexample {
    size_t index;        // 0-based input position
    std::string graph6;  // re-encoded input line
    std::string reason;
};

struct TheoremVerdict {
    TheoremId theorem;
    size_t scanned = 0;
    size_t hypothesis_hits = 0;
    size_t undecided = 0;
    size_t input_errors = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0;

    bool clean() const { return counterexamples.empty() && input_errors == 0; }
};

/// Evaluates one theorem on one graph (hypothesis first: connectivity,
/// claw-freeness, then criticality).
GraphOutcome evaluate_theorem(TheoremId id, const Graph& g, const ScanConfig& cfg);

/// Scans a graph6 stream. Results are accumulated in input order regardless
/// of worker count; `row` (when set) is called once per input line, in order.
TheoremVerdict scan_stream(std::istream& in, const ScanConfig& cfg,
                           const std::function<void(size_t, const std::string&,
                                                    const GraphOutcome&)>& row = nullptr);

/// Same engine over in-memory graphs (used by the acceptance suite).
TheoremVerdict scan_graphs(const std::vector<Graph>& graphs, const ScanConfig& cfg);

}  // namespace domcrit
