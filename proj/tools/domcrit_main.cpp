// Command-line front end: family generation, invariant solving, criticality
// checks, closure, classification, cycle-lemma verification, and theorem
// scans over graph6 streams.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcrit/closure.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/hamilton.hpp"
#include "domcrit/scan.hpp"
#include "domcrit/solvers.hpp"
#include "domcrit/structure.hpp"

using nlohmann::json;
using namespace domcrit;

namespace {

struct InputLines {
    std::unique_ptr<std::ifstream> file;
    std::istream* stream = nullptr;

    static InputLines open(const std::string& path) {
        InputLines in;
        if (path.empty() || path == "-") {
            in.stream = &std::cin;
        } else {
            in.file = std::make_unique<std::ifstream>(path);
            if (!*in.file) throw CLI::ValidationError("input", "cannot open " + path);
            in.stream = in.file.get();
        }
        return in;
    }
};

// per-line driver: skips blank lines and the optional >>graph6<< header
template <typename F>
int for_each_graph(std::istream& in, size_t offset, F&& f) {
    std::string line;
    size_t index = 0;
    int input_errors = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == ">>graph6<<") continue;
        size_t this_index = index++;
        if (this_index < offset) continue;
        try {
            Graph g = graph6_decode(line);
            f(this_index, g);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << (this_index + 1) << ": " << e.what() << "\n";
            ++input_errors;
        }
    }
    return input_errors;
}

void emit_graph(const LabeledGraph& lg, const std::string& format, std::ostream& out) {
    if (format == "graph6") {
        out << graph6_encode(lg.graph) << "\n";
    } else if (format == "edgelist") {
        out << "p " << lg.graph.n() << " " << lg.graph.edge_count() << "\n";
        for (size_t v = 0; v < lg.labels.size(); ++v)
            out << "v " << v << " " << lg.labels[v] << "\n";
        for (const Edge& e : lg.graph.edges()) out << "e " << e.u << " " << e.v << "\n";
    } else {  // json
        json j;
        j["n"] = lg.graph.n();
        j["edges"] = json::array();
        for (const Edge& e : lg.graph.edges()) j["edges"].push_back({e.u, e.v});
        j["labels"] = lg.labels;
        out << j.dump() << "\n";
    }
}

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "undefined";
}

json opt_json(const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
}

InvariantKind kind_from(const std::string& s) {
    if (s == "gamma") return InvariantKind::Gamma;
    if (s == "gamma_c") return InvariantKind::GammaC;
    if (s == "gamma_t") return InvariantKind::GammaT;
    if (s == "alpha") return InvariantKind::Alpha;
    throw CLI::ValidationError("kind", "unknown invariant " + s);
}

struct GenOptions {
    std::string format = "graph6";
    int k = 3, l = 6, n = 5;
    std::vector<int> s{1, 1, 1};
    std::vector<int> q{3, 3, 3, 3, 3};
    std::vector<int> r{3, 3, 2};
};

void add_gen(CLI::App& app, GenOptions& opt) {
    auto* gen = app.add_subcommand("gen", "generate a graph family as graph6/edgelist/json");
    gen->fallthrough();
    gen->add_option("--format", opt.format)->check(CLI::IsMember({"graph6", "edgelist", "json"}));

    auto emit = [&opt](const LabeledGraph& lg) { emit_graph(lg, opt.format, std::cout); };
    auto* gk = gen->add_subcommand("gk", "G_k (k >= 3)");
    gk->add_option("--k", opt.k)->required();
    gk->callback([&opt, emit] { emit(make_Gk(opt.k)); });

    auto* jl = gen->add_subcommand("jl", "J_l (l >= 6)");
    jl->add_option("--l", opt.l)->required();
    jl->callback([&opt, emit] { emit(make_Jl(opt.l)); });

    auto* tl = gen->add_subcommand("tl", "T_l (l >= 2)");
    tl->add_option("--l", opt.l)->required();
    tl->callback([&opt, emit] { emit(make_Tl(opt.l)); });

    gen->add_subcommand("p333", "P_{3,3,3}")->callback([emit] { emit(make_P333()); });

    auto* net = gen->add_subcommand("net", "net N_{s1,s2,s3}");
    net->add_option("--s", opt.s)->expected(3)->required();
    net->callback([&opt, emit] { emit(make_net(opt.s[0], opt.s[1], opt.s[2])); });

    auto* star = gen->add_subcommand("star", "star K_{1,n}");
    star->add_option("--n", opt.n)->required();
    star->callback([&opt, emit] { emit(make_star(opt.n)); });

    auto* cyc = gen->add_subcommand("cycle", "cycle C_n");
    cyc->add_option("--n", opt.n)->required();
    cyc->callback([&opt, emit] { emit(make_cycle(opt.n)); });

    auto* comp = gen->add_subcommand("complete", "complete K_n");
    comp->add_option("--n", opt.n)->required();
    comp->callback([&opt, emit] { emit(make_complete(opt.n)); });

    auto* f1 = gen->add_subcommand("f1", "class F1 member");
    f1->add_option("--q", opt.q)->expected(5)->required();
    f1->callback([&opt, emit] {
        emit(make_F1({{opt.q[0], opt.q[1], opt.q[2], opt.q[3], opt.q[4]}}));
    });

    auto* f2 = gen->add_subcommand("f2", "class F2 member");
    f2->add_option("--r", opt.r)->expected(3)->required();
    f2->callback([&opt, emit] { emit(make_F2({{opt.r[0], opt.r[1], opt.r[2]}})); });

    auto* f3 = gen->add_subcommand("f3", "class F3 member");
    f3->add_option("--k", opt.k)->required();
    f3->callback([&opt, emit] { emit(make_F3({opt.k})); });

    gen->add_subcommand("fig5", "the 9-vertex fixture")->callback([emit] { emit(make_fig5()); });
    gen->require_subcommand(1);
}

struct SolveOptions {
    std::string input = "-";
    std::string format = "table";
    std::vector<std::string> invariants{"gamma", "gamma_c", "gamma_t", "alpha", "kappa",
                                        "hamiltonian"};
    bool witness = false;
    double budget = 10.0;
    size_t offset = 0;
};

int run_solve(const SolveOptions& opt) {
    auto in = InputLines::open(opt.input);
    bool csv_header = true;
    int errors = for_each_graph(*in.stream, opt.offset, [&](size_t index, const Graph& g) {
        Deadline dl = Deadline::after(std::chrono::duration<double>(opt.budget));
        json row;
        row["index"] = index;
        row["graph6"] = graph6_encode(g);
        row["n"] = g.n();
        row["m"] = g.edge_count();
        for (const std::string& name : opt.invariants) {
            try {
                if (name == "kappa") {
                    row[name] = connectivity(g);
                } else if (name == "hamiltonian") {
                    auto cycle = is_hamiltonian(g, &dl);
                    row[name] = cycle.has_value();
                    if (opt.witness && cycle) row["hamiltonian_cycle"] = *cycle;
                } else {
                    SolveResult r = solve_invariant(g, kind_from(name), &dl);
                    row[name] = opt_json(r.value);
                    if (opt.witness && r.defined()) row[name + "_witness"] = r.witness;
                }
            } catch (const Timeout&) {
                row[name] = "timeout";
            } catch (const TooLarge& e) {
                row[name] = "too-large";
            }
        }
        if (opt.format == "json") {
            std::cout << row.dump() << "\n";
        } else if (opt.format == "csv") {
            if (csv_header) {
                std::cout << "index,n,m";
                for (const auto& name : opt.invariants) std::cout << "," << name;
                std::cout << "\n";
                csv_header = false;
            }
            std::cout << index << "," << g.n() << "," << g.edge_count();
            for (const auto& name : opt.invariants) {
                std::cout << ",";
                const json& cell = row[name];
                if (cell.is_null()) std::cout << "undefined";
                else if (cell.is_boolean()) std::cout << (cell.get<bool>() ? "true" : "false");
                else if (cell.is_string()) std::cout << cell.get<std::string>();
                else std::cout << cell.dump();
            }
            std::cout << "\n";
        } else {
            std::cout << "graph " << index << ": n=" << g.n() << " m=" << g.edge_count();
            for (const auto& name : opt.invariants) {
                const json& cell = row[name];
                std::cout << " " << name << "=";
                if (cell.is_null()) std::cout << "undefined";
                else if (cell.is_boolean()) std::cout << (cell.get<bool>() ? "true" : "false");
                else if (cell.is_string()) std::cout << cell.get<std::string>();
                else std::cout << cell.dump();
                if (opt.witness && row.contains(name + "_witness"))
                    std::cout << row[name + "_witness"].dump();
            }
            std::cout << "\n";
        }
    });
    return errors ? 2 : 0;
}

struct CriticalOptions {
    std::string input = "-";
    std::string kind = "gamma";
    std::string mode = "vertex";
    int k = 0;  // 0 = infer
    std::string format = "table";
    double budget = 60.0;
    size_t offset = 0;
};

int run_check_critical(const CriticalOptions& opt) {
    auto in = InputLines::open(opt.input);
    int failures = 0;
    int errors = for_each_graph(*in.stream, opt.offset, [&](size_t index, const Graph& g) {
        Deadline dl = Deadline::after(std::chrono::duration<double>(opt.budget));
        InvariantKind kind = kind_from(opt.kind);
        json row;
        row["index"] = index;
        row["kind"] = opt.kind;
        row["mode"] = opt.mode;
        try {
            CriticalityReport report =
                opt.mode == "edge"
                    ? check_edge_critical(g, kind, opt.k ? opt.k
                                                         : *solve_invariant(g, kind, &dl).value,
                                          &dl)
                    : (opt.k ? check_vertex_critical(g, kind, opt.k, &dl)
                             : check_vertex_critical_auto(g, kind, &dl));
            row["k"] = report.k;
            row["critical"] = report.critical;
            if (report.violation) {
                row["violation"] = report.violation->reason;
                if (report.violation->vertex >= 0) row["violating_vertex"] = report.violation->vertex;
            }
            if (!report.critical) ++failures;
        } catch (const Timeout&) {
            row["error"] = "timeout";
            ++failures;
        } catch (const std::exception& e) {
            row["error"] = e.what();
            ++failures;
        }
        if (opt.format == "json") {
            std::cout << row.dump() << "\n";
        } else {
            std::cout << "graph " << index << ": ";
            if (row.contains("error")) {
                std::cout << "error: " << row["error"].get<std::string>() << "\n";
            } else {
                std::cout << (row["critical"].get<bool>() ? "critical" : "not-critical")
                          << " (k=" << row["k"].get<int>() << ")";
                if (row.contains("violation"))
                    std::cout << " — " << row["violation"].get<std::string>();
                std::cout << "\n";
            }
        }
    });
    return errors ? 2 : (failures ? 1 : 0);
}

int run_closure(const std::string& input, const std::string& format, size_t offset) {
    auto in = InputLines::open(input);
    int failures = 0;
    int errors = for_each_graph(*in.stream, offset, [&](size_t index, const Graph& g) {
        try {
            ClosureResult r = closure(g);
            if (format == "json") {
                json j;
                j["index"] = index;
                j["graph6"] = graph6_encode(r.closed);
                j["trace"] = json::array();
                for (const auto& step : r.trace) {
                    json s;
                    s["vertex"] = step.vertex;
                    s["added"] = json::array();
                    for (const Edge& e : step.added) s["added"].push_back({e.u, e.v});
                    j["trace"].push_back(s);
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << graph6_encode(r.closed) << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "graph " << index << ": " << e.what() << "\n";
            ++failures;
        }
    });
    return errors || failures ? 2 : 0;
}

int run_classify(const std::string& input, const std::string& format, size_t offset) {
    auto in = InputLines::open(input);
    int errors = for_each_graph(*in.stream, offset, [&](size_t index, const Graph& g) {
        ClassMembership m = classify(g);
        if (format == "json") {
            json j;
            j["index"] = index;
            j["verdict"] = verdict_name(m.verdict);
            if (m.spec) j["family"] = family_name(*m.spec);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "graph " << index << ": " << verdict_name(m.verdict);
            if (m.spec) std::cout << " (" << family_name(*m.spec) << ")";
            std::cout << "\n";
        }
    });
    return errors ? 2 : 0;
}

int run_cycle_lemmas(const std::string& input, bool strict, double budget, size_t offset,
                     const std::string& format) {
    auto in = InputLines::open(input);
    int failures = 0;
    int errors = for_each_graph(*in.stream, offset, [&](size_t index, const Graph& g) {
        Deadline dl = Deadline::after(std::chrono::duration<double>(budget));
        json j;
        j["index"] = index;
        try {
            CycleLemmaReport report = verify_cycle_lemmas(g, strict, &dl);
            j["cycle"] = report.cycle;
            j["cycles_checked"] = report.cycles_checked;
            j["claw_lemmas_applicable"] = report.claw_lemmas_applicable;
            j["all_passed"] = report.all_passed();
            j["components"] = json::array();
            for (const auto& c : report.components) {
                json cj;
                cj["component"] = c.component;
                cj["attachments"] = c.attachments;
                for (size_t i = 0; i < c.lemmas.size(); ++i) {
                    const auto& st = c.lemmas[i];
                    std::string name = cycle_lemma_name(static_cast<CycleLemma>(i));
                    cj[name] = st.state == LemmaStatus::State::Pass   ? "pass"
                               : st.state == LemmaStatus::State::Fail ? "fail"
                                                                      : "not-applicable";
                    if (!st.violation.empty()) cj[name + "_violation"] = st.violation;
                }
                j["components"].push_back(cj);
            }
            if (!report.all_passed()) ++failures;
        } catch (const Timeout&) {
            j["error"] = "timeout";
            ++failures;
        } catch (const std::exception& e) {
            j["error"] = e.what();  // hypothesis unmet or too large
        }
        if (format == "json") {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "graph " << index << ": ";
            if (j.contains("error")) std::cout << j["error"].get<std::string>() << "\n";
            else
                std::cout << (j["all_passed"].get<bool>() ? "all lemmas pass" : "LEMMA FAILURE")
                          << " (cycle length " << j["cycle"].size() << ", "
                          << j["components"].size() << " component checks)\n";
        }
    });
    return errors ? 2 : (failures ? 1 : 0);
}

struct ScanOptions {
    std::string input = "-";
    std::string theorem = "A";
    std::string format = "table";
    int jobs = 1;
    double budget = 10.0;
    int max_cut_size = 4;
    bool strict = false;
    size_t offset = 0;
};

int run_scan(const ScanOptions& opt) {
    auto in = InputLines::open(opt.input);
    ScanConfig cfg;
    cfg.theorem = theorem_from_name(opt.theorem);
    cfg.jobs = opt.jobs;
    cfg.budget_seconds = opt.budget;
    cfg.strict = opt.strict;
    cfg.max_cut_size = opt.max_cut_size;
    cfg.offset = opt.offset;

    std::function<void(size_t, const std::string&, const GraphOutcome&)> row;
    if (opt.format == "json") {
        row = [](size_t index, const std::string& g6, const GraphOutcome& o) {
            json j;
            j["index"] = index;
            j["graph6"] = g6;
            switch (o.status) {
                case GraphOutcome::Status::NoHypothesis: j["status"] = "no-hypothesis"; break;
                case GraphOutcome::Status::Verified: j["status"] = "verified"; break;
                case GraphOutcome::Status::Counterexample: j["status"] = "counterexample"; break;
                case GraphOutcome::Status::Undecided: j["status"] = "undecided"; break;
                case GraphOutcome::Status::InputError: j["status"] = "input-error"; break;
            }
            if (!o.reason.empty()) j["reason"] = o.reason;
            std::cout << j.dump() << "\n";
        };
    }
    TheoremVerdict v = scan_stream(*in.stream, cfg, row);

    if (opt.format == "csv") {
        std::cout << "theorem,scanned,hypothesis_hits,counterexamples,undecided,input_errors,"
                     "elapsed_seconds\n";
        std::cout << theorem_name(v.theorem) << "," << v.scanned << "," << v.hypothesis_hits
                  << "," << v.counterexamples.size() << "," << v.undecided << ","
                  << v.input_errors << "," << v.elapsed_seconds << "\n";
    } else if (opt.format != "json") {
        std::cout << "theorem " << theorem_name(v.theorem) << ": scanned " << v.scanned
                  << ", hypothesis hits " << v.hypothesis_hits << ", counterexamples "
                  << v.counterexamples.size() << ", undecided " << v.undecided
                  << ", input errors " << v.input_errors << ", elapsed " << v.elapsed_seconds
                  << "s\n";
    }
    for (const auto& ce : v.counterexamples)
        std::cerr << "counterexample at input " << ce.index << ": " << ce.graph6 << " — "
                  << ce.reason << "\n";
    if (!v.counterexamples.empty()) return 1;
    if (v.input_errors) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination-criticality verification toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    add_gen(app, gen_opt);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "exact invariants per graph6 line");
    solve->add_option("input", solve_opt.input, "graph6 file or - for stdin");
    solve->add_option("--invariants", solve_opt.invariants)->delimiter(',');
    solve->add_flag("--witness", solve_opt.witness);
    solve->add_option("--format", solve_opt.format)
        ->check(CLI::IsMember({"table", "json", "csv"}));
    solve->add_option("--budget", solve_opt.budget);
    solve->add_option("--offset", solve_opt.offset);

    CriticalOptions crit_opt;
    auto* crit = app.add_subcommand("check-critical", "vertex/edge criticality per graph");
    crit->add_option("input", crit_opt.input);
    crit->add_option("--kind", crit_opt.kind)
        ->check(CLI::IsMember({"gamma", "gamma_c", "gamma_t"}));
    crit->add_option("--mode", crit_opt.mode)->check(CLI::IsMember({"vertex", "edge"}));
    crit->add_option("--k", crit_opt.k);
    crit->add_option("--format", crit_opt.format)->check(CLI::IsMember({"table", "json"}));
    crit->add_option("--budget", crit_opt.budget);
    crit->add_option("--offset", crit_opt.offset);

    std::string closure_input = "-", closure_format = "graph6";
    size_t closure_offset = 0;
    auto* clo = app.add_subcommand("closure", "Ryjacek closure of claw-free graphs");
    clo->add_option("input", closure_input);
    clo->add_option("--format", closure_format)->check(CLI::IsMember({"graph6", "json"}));
    clo->add_option("--offset", closure_offset);

    std::string classify_input = "-", classify_format = "table";
    size_t classify_offset = 0;
    auto* cls = app.add_subcommand("classify", "recognize F1/F2/F3/P_{3,3,3} membership");
    cls->add_option("input", classify_input);
    cls->add_option("--format", classify_format)->check(CLI::IsMember({"table", "json"}));
    cls->add_option("--offset", classify_offset);

    std::string lemmas_input = "-", lemmas_format = "table";
    bool lemmas_strict = false;
    double lemmas_budget = 30.0;
    size_t lemmas_offset = 0;
    auto* lem = app.add_subcommand("cycle-lemmas", "longest-cycle lemma verification");
    lem->add_option("input", lemmas_input);
    lem->add_flag("--strict", lemmas_strict, "check every longest cycle (n <= 10)");
    lem->add_option("--budget", lemmas_budget);
    lem->add_option("--offset", lemmas_offset);
    lem->add_option("--format", lemmas_format)->check(CLI::IsMember({"table", "json"}));

    ScanOptions scan_opt;
    auto* scan = app.add_subcommand("scan", "theorem scan over a graph6 stream");
    scan->add_option("input", scan_opt.input);
    scan->add_option("--theorem", scan_opt.theorem)
        ->check(CLI::IsMember({"A", "M", "W", "mike", "pumm", "ch"}))
        ->required();
    scan->add_option("--jobs", scan_opt.jobs)->check(CLI::PositiveNumber);
    scan->add_option("--budget", scan_opt.budget);
    scan->add_option("--max-cut-size", scan_opt.max_cut_size);
    scan->add_flag("--strict", scan_opt.strict);
    scan->add_option("--offset", scan_opt.offset);
    scan->add_option("--format", scan_opt.format)
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (crit->parsed()) return run_check_critical(crit_opt);
        if (clo->parsed()) return run_closure(closure_input, closure_format, closure_offset);
        if (cls->parsed()) return run_classify(classify_input, classify_format, classify_offset);
        if (lem->parsed())
            return run_cycle_lemmas(lemmas_input, lemmas_strict, lemmas_budget, lemmas_offset,
                                    lemmas_format);
        if (scan->parsed()) return run_scan(scan_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
