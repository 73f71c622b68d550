#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "domcrit/families.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/isomorphism.hpp"

using namespace domcrit;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string tmp_in = std::string(std::tmpnam(nullptr)) + ".in";
    std::string cmd = std::string(DOMCRIT_CLI_PATH) + " " + args;
    if (!stdin_data.empty()) {
        std::ofstream f(tmp_in);
        f << stdin_data;
        f.close();
        cmd += " < " + tmp_in;
    }
    cmd += " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    if (!stdin_data.empty()) std::remove(tmp_in.c_str());
    return {WEXITSTATUS(status), out};
}

std::string first_line(const std::string& s) {
    auto pos = s.find('\n');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

TEST_CASE("gen emits decodable graph6") {
    RunResult r = run("gen gk --k 3 --format graph6");
    CHECK(r.exit_code == 0);
    Graph g = graph6_decode(first_line(r.output));
    CHECK(is_isomorphic(g, make_Gk(3).graph).isomorphic());

    RunResult tl = run("gen tl --l 6");
    CHECK(graph6_decode(first_line(tl.output)).n() == 23);

    RunResult net = run("gen net --s 3 3 3");
    CHECK(graph6_decode(first_line(net.output)).n() == 12);
}

TEST_CASE("gen edge list format carries labels") {
    RunResult r = run("gen p333 --format edgelist");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("p 9 12") != std::string::npos);
    CHECK(r.output.find("v 0 u1") != std::string::npos);
    CHECK(r.output.find("e ") != std::string::npos);
}

TEST_CASE("gen rejects bad parameters with nonzero exit") {
    CHECK(run("gen gk --k 2").exit_code != 0);
    CHECK(run("gen jl --l 5").exit_code != 0);
}

TEST_CASE("solve reports invariants per line") {
    std::string g3 = graph6_encode(make_Gk(3).graph) + "\n";
    RunResult r = run("solve - --invariants gamma,gamma_c,kappa,hamiltonian --format json", g3);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"gamma\":3") != std::string::npos);
    CHECK(r.output.find("\"kappa\":2") != std::string::npos);
    CHECK(r.output.find("\"hamiltonian\":false") != std::string::npos);

    std::string p = graph6_encode(make_P333().graph) + "\n";
    RunResult rp = run("solve - --invariants gamma_c --format json", p);
    CHECK(rp.output.find("\"gamma_c\":5") != std::string::npos);

    std::string k1 = graph6_encode(Graph(1)) + "\n";
    RunResult rk = run("solve - --invariants gamma,gamma_t --format json", k1);
    CHECK(rk.output.find("\"gamma\":1") != std::string::npos);
    CHECK(rk.output.find("\"gamma_t\":null") != std::string::npos);
}

TEST_CASE("solve flags decode failures but continues") {
    RunResult r = run("solve - --invariants gamma --format json", "A_\n!!!\nB_\n");
    CHECK(r.exit_code == 2);
    // both valid lines still processed
    CHECK(r.output.find("\"index\":0") != std::string::npos);
    CHECK(r.output.find("\"index\":2") != std::string::npos);
}

TEST_CASE("check-critical on fixtures") {
    std::string g3 = graph6_encode(make_Gk(3).graph) + "\n";
    RunResult r = run("check-critical - --kind gamma --mode vertex --k 3 --format json", g3);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"critical\":true") != std::string::npos);

    std::string c6 = graph6_encode(make_cycle(6).graph) + "\n";
    RunResult rc = run("check-critical - --kind gamma --mode vertex --k 2 --format json", c6);
    CHECK(rc.exit_code == 1);
    CHECK(rc.output.find("\"critical\":false") != std::string::npos);

    std::string c4 = graph6_encode(make_cycle(4).graph) + "\n";
    RunResult re = run("check-critical - --kind gamma --mode edge --k 2 --format json", c4);
    CHECK(re.exit_code == 0);
    CHECK(re.output.find("\"critical\":true") != std::string::npos);
}

TEST_CASE("closure and classify subcommands") {
    std::string k5 = graph6_encode(make_complete(5).graph) + "\n";
    RunResult r = run("closure -", k5);
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.output) == graph6_encode(make_complete(5).graph));

    std::string p333 = graph6_encode(make_P333().graph) + "\n";
    RunResult rc = run("classify - --format json", p333);
    CHECK(rc.exit_code == 0);
    CHECK(rc.output.find("P_{3,3,3}") != std::string::npos);
}

TEST_CASE("cycle-lemmas subcommand") {
    std::string fig5 = graph6_encode(make_fig5().graph) + "\n";
    RunResult r = run("cycle-lemmas - --format json", fig5);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"all_passed\":true") != std::string::npos);

    std::string k4 = graph6_encode(make_complete(4).graph) + "\n";
    RunResult rk = run("cycle-lemmas - --format json", k4);
    CHECK(rk.output.find("Hamiltonian") != std::string::npos);
}

TEST_CASE("scan exit codes and offset resume") {
    // clean scan: exit 0
    std::string lines = graph6_encode(make_complete(4).graph) + "\n" +
                        graph6_encode(make_cycle(5).graph) + "\n" +
                        graph6_encode(make_cycle(6).graph) + "\n";
    RunResult clean = run("scan - --theorem A --format csv", lines);
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("A,3,") != std::string::npos);

    // input error: exit 2
    RunResult bad = run("scan - --theorem A", "!!!\n");
    CHECK(bad.exit_code == 2);

    // offset produces the suffix
    RunResult shifted = run("scan - --theorem A --offset 2 --format csv", lines);
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.output.find("A,1,") != std::string::npos);

    // json rows arrive in input order
    RunResult rows = run("scan - --theorem A --format json --jobs 2", lines);
    CHECK(rows.output.find("\"index\":0") < rows.output.find("\"index\":1"));
    CHECK(rows.output.find("\"index\":1") < rows.output.find("\"index\":2"));
}

TEST_CASE("gensmall emits validated catalogs") {
    std::string cmd = std::string(GENSMALL_PATH) + " --max-n 5 --connected 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    size_t lines = 0;
    for (char c : out)
        if (c == '\n') ++lines;
    CHECK(lines == 31);  // connected graphs on 1..5 vertices
}
