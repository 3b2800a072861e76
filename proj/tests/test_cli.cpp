// Exit-code contract and output checks for the installed CLI, driven through
// the shell. 0: success / true verdict, 1: false verdict, 2: usage or input
// error.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "distspec/constructions.hpp"
#include "distspec/graph6.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DISTSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string g6(const distspec::Graph& g) { return distspec::to_graph6(g); }

}  // namespace

using namespace distspec;

TEST_CASE("spectrum") {
    const auto r = run_cli("--json spectrum A_");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["charpoly"] == nlohmann::json::parse("[-1,0,1]"));
}

TEST_CASE("cospectral verdicts and exit codes") {
    const std::string gg = g6(gadget_graph_g());
    const std::string hh = g6(gadget_graph_h());
    SUBCASE("gadget pair: true, exit 0") {
        const auto r = run_cli("--json cospectral '" + gg + "' '" + hh + "'");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["cospectral"] == true);
        CHECK(j["isomorphic"] == false);
        CHECK(j["edges"] == nlohmann::json::parse("[17,16]"));
    }
    SUBCASE("P3 vs K3: false, exit 1") {
        const auto r = run_cli("--json cospectral Bw BW");
        // 'Bw' is K3, 'BW' is P3 with the middle labeled differently; verify
        // through the library to keep the fixture honest
        CHECK(from_graph6("Bw").edge_count() == 3);
        CHECK(from_graph6("BW").edge_count() == 2);
        CHECK(r.exit_code == 1);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["cospectral"] == false);
    }
    SUBCASE("text and json verdicts agree") {
        const auto rj = run_cli("--json cospectral '" + gg + "' '" + hh + "'");
        const auto rt = run_cli("cospectral '" + gg + "' '" + hh + "'");
        CHECK(rj.exit_code == rt.exit_code);
        CHECK(rt.out.find("cospectral: true") != std::string::npos);
    }
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("spectrum").exit_code == 2);                    // missing arg
    CHECK(run_cli("spectrum '~~'").exit_code == 2);               // malformed graph6
    CHECK(run_cli("spectrum '@file:/nonexistent.g'").exit_code == 2);
    CHECK(run_cli("cospectral A_ A_@@").exit_code == 2);          // oversized body
    CHECK(run_cli("mine 10").exit_code == 2);                     // needs --allow-large-n
}

TEST_CASE("edge-list file input") {
    const std::string path = "cli_test_edges.txt";
    {
        std::ofstream out(path);
        out << "3\n0 1\n1 2\n";
    }
    const auto r = run_cli("--json spectrum '@file:" + path + "'");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["charpoly"] == nlohmann::json::parse("[-4,-6,0,1]"));
    std::remove(path.c_str());
}

TEST_CASE("identify, pair, family") {
    SUBCASE("identify P2 onto P2 gives P3") {
        const auto r = run_cli("--json identify A_ 1 A_ 0");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["n"] == 3);
        CHECK(j["edges"] == 2);
    }
    SUBCASE("pair with K=P2") {
        const auto r = run_cli("--json pair A_ 0 0");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["gk"]["edges"] == 18);
        CHECK(j["hk"]["edges"] == 17);
    }
    SUBCASE("family 2") {
        const auto r = run_cli("--json family 2");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["members"].size() == 3);
        CHECK(j["members"][0]["edges"] == 34);
        CHECK(j["members"][2]["edges"] == 32);
    }
    SUBCASE("family cap is an input error") {
        CHECK(run_cli("family 7").exit_code == 2);
    }
}

TEST_CASE("verify-t21") {
    SUBCASE("explicit K") {
        const auto r = run_cli("--json verify-t21 A_ 0 0");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["cospectral"] == true);
    }
    SUBCASE("seeded sweep is reproducible") {
        const auto a = run_cli("--json verify-t21 --sweep 3 --seed 42");
        const auto b = run_cli("--json verify-t21 --sweep 3 --seed 42");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
    SUBCASE("missing K and no sweep") {
        CHECK(run_cli("verify-t21").exit_code == 2);
    }
}

TEST_CASE("switching pipeline") {
    // frozen 6-vertex example with a c-valid candidate that fails hypotheses
    const Graph g = Graph::from_edge_list(6, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}});
    const std::string gs = g6(g);
    SUBCASE("switch-scan runs and reports") {
        const auto r = run_cli("--json switch-scan '" + gs + "'");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["candidates"].size() >= 1);
    }
    SUBCASE("switch-apply outputs the switched graph") {
        const auto r = run_cli("--json switch-apply '" + gs + "' 0 1 4 2 3");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["switched"]["edges"] == g.edge_count());
    }
    SUBCASE("switch-apply with an invalid tuple exits 2") {
        CHECK(run_cli("switch-apply '" + gs + "' 0 1 4 2 5").exit_code == 2);
    }
    SUBCASE("verify-t32 reports the hypothesis failure as a false verdict") {
        const auto r = run_cli("--json verify-t32 '" + gs + "' 0 1 4 2 3");
        CHECK(r.exit_code == 1);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["hypotheses_ok"] == false);
    }
}

TEST_CASE("mine") {
    SUBCASE("n=5 finds nothing") {
        const auto r = run_cli("--json mine 5");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["n"] == 5);
        CHECK(j["connected_count"] == 21);
        CHECK(j["class_count"] == 0);
    }
    SUBCASE("n=7: every pair switching-explained") {
        const auto r = run_cli("--json --threads 2 mine 7");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["class_count"] == 11);
        for (const auto& cls : j["classes"])
            for (const auto& p : cls["pairs"]) {
                CHECK(p["switching_explained"] == true);
                CHECK(p["switch_certificate"].is_object());
            }
    }
    SUBCASE("graph6 dump file") {
        const std::string path = "cli_test_dump.g6";
        const auto r = run_cli("--json mine 5 --dump-g6 " + path);
        CHECK(r.exit_code == 0);
        std::ifstream in(path);
        int lines = 0;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) {
                CHECK(from_graph6(line).vertex_count() == 5);
                ++lines;
            }
        CHECK(lines == 21);
        std::remove(path.c_str());
    }
    SUBCASE("DISTSPEC_THREADS env fallback gives identical output") {
        const auto a = run_cli("--json mine 6");
        const std::string cmd = std::string("DISTSPEC_THREADS=2 ") + DISTSPEC_CLI_PATH + " --json mine 6";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf;
        while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
        pclose(pipe);
        CHECK(a.out == out);
    }
}
