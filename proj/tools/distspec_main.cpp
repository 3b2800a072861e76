// distspec command line: constructions, switching, verification and census
// pipelines with machine-readable output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "distspec/canonical.hpp"
#include "distspec/charpoly.hpp"
#include "distspec/constructions.hpp"
#include "distspec/distance.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"
#include "distspec/parallel.hpp"
#include "distspec/random_graphs.hpp"
#include "distspec/report_json.hpp"
#include "distspec/switching.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace distspec;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;   // command ran, verdict is negative
constexpr int exit_usage = 2;   // bad input / usage

struct Options {
    double tol = 1e-8;
    bool json_output = false;
    int threads = 0;  // 0: DISTSPEC_THREADS or 1
    unsigned long long seed = 0;
    bool allow_large_n = false;
};

// graph6 string, or "@file:PATH" naming an edge-list file ("n", then "u v" lines)
Graph parse_graph(const std::string& arg) {
    constexpr std::string_view prefix = "@file:";
    if (arg.rfind(prefix, 0) == 0) {
        const std::string path = arg.substr(prefix.size());
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open graph file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return from_edge_list_text(buf.str());
    }
    return from_graph6(arg);
}

json coeffs_json(const CharPoly& p) { return json::parse(charpoly_json(p)); }

json graph_json(const Graph& g) {
    json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    return j;
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json_output)
        std::cout << doc.dump() << "\n";
    else
        std::cout << text;
}

SwitchTuple tuple_from_vertices(const Graph& g, int s, int g1, int g2, int h1, int h2) {
    if (g1 > g2) std::swap(g1, g2);
    if (h1 > h2) std::swap(h1, h2);
    SwitchTuple t;
    t.s = s;
    t.g1 = g1;
    t.g2 = g2;
    t.h1 = h1;
    t.h2 = h2;
    const auto c = c_values(g, g1, g2, h1, h2);
    t.k = -c[static_cast<std::size_t>(g1)];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == g1 || v == g2 || v == h1 || v == h2) continue;
        if (c[static_cast<std::size_t>(v)] == -2)
            t.a.push_back(v);
        else if (c[static_cast<std::size_t>(v)] == 0)
            t.b.push_back(v);
        else
            throw std::invalid_argument("vertex " + std::to_string(v) + " has c-value " +
                                        std::to_string(c[static_cast<std::size_t>(v)]) +
                                        ", not in {-2,0}: no valid A/B partition");
    }
    return t;
}

int run_spectrum(const Options& opt, const std::string& garg) {
    const Graph g = parse_graph(garg);
    const CharPoly p = char_poly(distance_matrix(g));
    json j;
    j["n"] = g.vertex_count();
    j["charpoly"] = coeffs_json(p);
    std::ostringstream text;
    text << "n: " << g.vertex_count() << "\ncharpoly (constant first): " << p.decimal_key() << "\n";
    emit(opt, j, text.str());
    return exit_ok;
}

int run_cospectral(const Options& opt, const std::string& a1, const std::string& a2) {
    const Graph g1 = parse_graph(a1), g2 = parse_graph(a2);
    const bool cosp = distance_cospectral(g1, g2);
    bool iso = false;
    bool iso_known = true;
    try {
        iso = are_isomorphic(g1, g2);
    } catch (const std::runtime_error&) {
        iso_known = false;  // invariants tie beyond the canonical cap
    }
    json j;
    j["cospectral"] = cosp;
    if (iso_known)
        j["isomorphic"] = iso;
    else
        j["isomorphic"] = nullptr;
    j["edges"] = {g1.edge_count(), g2.edge_count()};
    std::ostringstream text;
    text << "cospectral: " << (cosp ? "true" : "false")
         << "\nisomorphic: " << (iso_known ? (iso ? "true" : "false") : "undecided")
         << "\nedges: " << g1.edge_count() << " " << g2.edge_count() << "\n";
    emit(opt, j, text.str());
    return cosp ? exit_ok : exit_false;
}

int run_identify(const Options& opt, const std::string& a1, int u, const std::string& a2, int v) {
    const Graph g = identify(parse_graph(a1), u, parse_graph(a2), v);
    emit(opt, graph_json(g), to_graph6(g) + "\n");
    return exit_ok;
}

int run_pair(const Options& opt, const std::string& karg, int v, int u) {
    auto [gk, hk] = build_pair(parse_graph(karg), v, u);
    json j;
    j["gk"] = graph_json(gk);
    j["hk"] = graph_json(hk);
    std::ostringstream text;
    text << "GK: " << to_graph6(gk) << " (" << gk.edge_count() << " edges)\n"
         << "HK: " << to_graph6(hk) << " (" << hk.edge_count() << " edges)\n";
    emit(opt, j, text.str());
    return exit_ok;
}

int run_family(const Options& opt, int k) {
    const auto members = family(k);
    json j;
    j["k"] = k;
    j["members"] = json::array();
    std::ostringstream text;
    for (const auto& g : members) {
        j["members"].push_back(graph_json(g));
        text << to_graph6(g) << " (" << g.edge_count() << " edges)\n";
    }
    emit(opt, j, text.str());
    return exit_ok;
}

json report_json_doc(const PerturbationReport& r) { return json::parse(perturbation_report_json(r)); }

std::string report_text(const PerturbationReport& r) {
    std::ostringstream text;
    text << "cospectral: " << (r.cospectral ? "true" : "false") << "\n";
    if (r.perturbation_checked)
        text << "eigenpairs checked: " << r.records.size() << ", skipped: " << r.skipped
             << "\nmax residual after perturbation: " << r.max_residual_after << " (tolerance " << r.tolerance
             << ")\n";
    else
        text << "perturbation formulas not applicable; exact check only\n";
    text << (r.passed ? "PASS" : "FAIL") << "\n";
    return text.str();
}

int run_verify_t21(const Options& opt, const std::string& karg, int v, int u, int sweep) {
    if (sweep > 0) {
        std::mt19937_64 rng(opt.seed);
        json instances = json::array();
        bool all_passed = true;
        std::ostringstream text;
        for (int i = 0; i < sweep; ++i) {
            std::uniform_int_distribution<int> size(2, 8);
            const int nk = size(rng);
            Graph k;
            switch (i % 3) {
                case 0: k = random_tree(rng, nk); break;
                case 1: k = (nk >= 3) ? cycle_graph(nk) : path_graph(nk); break;
                default: k = random_connected_graph(rng, nk, 0.45); break;
            }
            std::uniform_int_distribution<int> pick_v(0, nk - 1);
            const int vv = pick_v(rng);
            const int uu = static_cast<int>(rng() % 2);
            const auto rep = verify_gadget_pair(k, vv, uu, opt.tol);
            all_passed = all_passed && rep.passed;
            json inst;
            inst["k_graph6"] = to_graph6(k);
            inst["v"] = vv;
            inst["u"] = uu;
            inst["report"] = report_json_doc(rep);
            instances.push_back(inst);
            text << "K=" << to_graph6(k) << " v=" << vv << " u=" << uu << ": "
                 << (rep.passed ? "PASS" : "FAIL") << "\n";
        }
        json j;
        j["sweep"] = sweep;
        j["seed"] = opt.seed;
        j["all_passed"] = all_passed;
        j["instances"] = instances;
        text << (all_passed ? "PASS" : "FAIL") << "\n";
        emit(opt, j, text.str());
        return all_passed ? exit_ok : exit_false;
    }
    const auto rep = verify_gadget_pair(parse_graph(karg), v, u, opt.tol);
    emit(opt, report_json_doc(rep), report_text(rep));
    return rep.passed ? exit_ok : exit_false;
}

int run_switch_scan(const Options& opt, const std::string& garg) {
    const Graph g = parse_graph(garg);
    json j;
    j["graph6"] = to_graph6(g);
    j["candidates"] = json::array();
    std::ostringstream text;
    int usable = 0;
    for (const auto& t : find_switch_candidates(g)) {
        const Graph switched = apply_switch(g, t);
        json c;
        c["tuple"] = json::parse(switch_tuple_json(t));
        const bool connected = is_connected(switched);
        c["connected"] = connected;
        bool hyp = false;
        if (connected) {
            hyp = verify_distance_hypotheses(g, switched, t);
            c["hypotheses_ok"] = hyp;
            if (hyp) {
                c["switched_graph6"] = to_graph6(switched);
                c["cospectral"] = distance_cospectral(g, switched);
                ++usable;
            }
        } else {
            c["hypotheses_ok"] = false;
        }
        j["candidates"].push_back(c);
        text << "s=" << t.s << " g={" << t.g1 << "," << t.g2 << "} h={" << t.h1 << "," << t.h2
             << "} k=" << t.k << (hyp ? " [hypotheses ok]" : " [hypotheses fail]") << "\n";
    }
    j["usable_count"] = usable;
    text << "candidates: " << j["candidates"].size() << ", passing hypotheses: " << usable << "\n";
    emit(opt, j, text.str());
    return exit_ok;
}

int run_switch_apply(const Options& opt, const std::string& garg, int s, int g1, int g2, int h1, int h2) {
    const Graph g = parse_graph(garg);
    const SwitchTuple t = tuple_from_vertices(g, s, g1, g2, h1, h2);
    const Graph h = apply_switch(g, t);
    json j;
    j["tuple"] = json::parse(switch_tuple_json(t));
    j["switched"] = graph_json(h);
    emit(opt, j, to_graph6(h) + "\n");
    return exit_ok;
}

int run_verify_t32(const Options& opt, const std::string& garg, int s, int g1, int g2, int h1, int h2) {
    const Graph g = parse_graph(garg);
    const SwitchTuple t = tuple_from_vertices(g, s, g1, g2, h1, h2);
    json j;
    j["tuple"] = json::parse(switch_tuple_json(t));
    try {
        const auto rep = verify_switch_pair(g, t, opt.tol);
        j["report"] = report_json_doc(rep);
        emit(opt, j, report_text(rep));
        return rep.passed ? exit_ok : exit_false;
    } catch (const std::invalid_argument& e) {
        // candidate is structurally valid but the distance hypotheses fail:
        // a negative verdict, not a usage error
        const std::string what = e.what();
        if (what.find("distance hypotheses fail") == std::string::npos) throw;
        j["hypotheses_ok"] = false;
        j["reason"] = what;
        emit(opt, j, "hypotheses fail: " + what + "\nFAIL\n");
        return exit_false;
    }
}

int run_corollary(const Options& opt, const std::string& garg, int s, int g1, int g2, int h1, int h2,
                  int u, const std::string& karg, int v) {
    const Graph g = parse_graph(garg);
    const SwitchTuple t = tuple_from_vertices(g, s, g1, g2, h1, h2);
    const Graph k = parse_graph(karg);
    auto [gk, hk] = extend_switch_pair(g, t, u, k, v);
    json j;
    j["gk"] = graph_json(gk);
    j["hk"] = graph_json(hk);
    j["cospectral"] = true;  // extend_switch_pair asserts it
    std::ostringstream text;
    text << "GK: " << to_graph6(gk) << "\nHK: " << to_graph6(hk) << "\ncospectral: true\n";
    emit(opt, j, text.str());
    return exit_ok;
}

int run_mine(const Options& opt, int n, const std::string& out_path, const std::string& dump_path) {
    EnumerateOptions eopts;
    eopts.allow_large_n = opt.allow_large_n;
    eopts.threads = resolve_thread_count(opt.threads);
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::invalid_argument("cannot open dump file: " + dump_path);
        for (const auto& g : connected_graphs(n, eopts)) dump << to_graph6(g) << "\n";
    }
    const SearchReport rep = mine(n, eopts);
    const std::string doc = search_report_json(rep);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << doc << "\n";
    }
    if (opt.json_output) {
        std::cout << doc << "\n";
    } else {
        std::ostringstream text;
        text << "n: " << rep.n << "\nconnected classes: " << rep.connected_count
             << "\ncospectral classes: " << rep.classes.size() << "\n";
        for (const auto& cls : rep.classes) {
            text << "  class:";
            for (const auto& s : cls.graphs) text << " " << s;
            for (const auto& p : cls.pairs)
                text << " | pair(" << p.i << "," << p.j << ") edges=" << p.info.edge_counts[0] << "/"
                     << p.info.edge_counts[1]
                     << (p.info.switching_explained ? " switching-explained" : " unexplained");
            text << "\n";
        }
        std::cout << text.str();
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-cospectral graph constructions, switching and census tools"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags remain valid after the subcommand

    Options opt;
    app.add_option("--tol", opt.tol, "residual tolerance factor (bound = tol * n * max distance)")
        ->capture_default_str();
    app.add_flag("--json", opt.json_output, "emit exactly one JSON document on stdout");
    app.add_option("--threads", opt.threads, "worker threads (default: DISTSPEC_THREADS or 1)");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_flag("--allow-large-n", opt.allow_large_n, "unlock the long-running n=10 census");

    std::string garg, g2arg, karg, out_path, dump_path;
    int u = 0, v = 0, n = 0, k = 0;
    int s = 0, sg1 = 0, sg2 = 0, sh1 = 0, sh2 = 0;
    int sweep = 0;

    auto* spectrum = app.add_subcommand("spectrum", "exact distance charpoly of a graph");
    spectrum->add_option("graph", garg, "graph6 or @file:PATH")->required();

    auto* cospectral = app.add_subcommand("cospectral", "exact cospectrality verdict for two graphs");
    cospectral->add_option("graph1", garg)->required();
    cospectral->add_option("graph2", g2arg)->required();

    auto* identify_cmd = app.add_subcommand("identify", "merge vertex u of graph1 with vertex v of graph2");
    identify_cmd->add_option("graph1", garg)->required();
    identify_cmd->add_option("u", u)->required();
    identify_cmd->add_option("graph2", g2arg)->required();
    identify_cmd->add_option("v", v)->required();

    auto* pair_cmd = app.add_subcommand("pair", "build the gadget identification pair (GK, HK)");
    pair_cmd->add_option("K", karg, "graph to identify onto the gadgets")->required();
    pair_cmd->add_option("v", v, "vertex of K merged with the gadget root")->required();
    pair_cmd->add_option("u", u, "gadget root, 0 or 1")->required();

    auto* family_cmd = app.add_subcommand("family", "k+1 mutually cospectral graphs with distinct edge counts");
    family_cmd->add_option("k", k, "number of gadget copies")->required();

    auto* t21 = app.add_subcommand("verify-t21", "perturbation + exact verification of a gadget pair");
    t21->add_option("K", karg, "graph to identify (omit with --sweep)");
    t21->add_option("v", v);
    t21->add_option("u", u);
    t21->add_option("--sweep", sweep, "verify this many seeded random K instead");

    auto* scan = app.add_subcommand("switch-scan", "list switching candidates and check their hypotheses");
    scan->add_option("graph", garg)->required();

    auto* sapply = app.add_subcommand("switch-apply", "apply one distance switch");
    sapply->add_option("graph", garg)->required();
    sapply->add_option("s", s)->required();
    sapply->add_option("g1", sg1)->required();
    sapply->add_option("g2", sg2)->required();
    sapply->add_option("h1", sh1)->required();
    sapply->add_option("h2", sh2)->required();

    auto* t32 = app.add_subcommand("verify-t32", "perturbation + exact verification of a switching pair");
    t32->add_option("graph", garg)->required();
    t32->add_option("s", s)->required();
    t32->add_option("g1", sg1)->required();
    t32->add_option("g2", sg2)->required();
    t32->add_option("h1", sh1)->required();
    t32->add_option("h2", sh2)->required();

    auto* coro = app.add_subcommand("corollary", "extend a switching pair by graph identification");
    coro->add_option("graph", garg)->required();
    coro->add_option("s", s)->required();
    coro->add_option("g1", sg1)->required();
    coro->add_option("g2", sg2)->required();
    coro->add_option("h1", sh1)->required();
    coro->add_option("h2", sh2)->required();
    coro->add_option("u", u, "identification vertex in the base graph")->required();
    coro->add_option("K", karg)->required();
    coro->add_option("v", v, "identification vertex in K")->required();

    auto* mine_cmd = app.add_subcommand("mine", "census of all distance-cospectral pairs at order n");
    mine_cmd->add_option("n", n)->required();
    mine_cmd->add_option("--out", out_path, "also write the JSON report to this file");
    mine_cmd->add_option("--dump-g6", dump_path, "write every connected graph at order n, one graph6 per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*spectrum) return run_spectrum(opt, garg);
        if (*cospectral) return run_cospectral(opt, garg, g2arg);
        if (*identify_cmd) return run_identify(opt, garg, u, g2arg, v);
        if (*pair_cmd) return run_pair(opt, karg, v, u);
        if (*family_cmd) return run_family(opt, k);
        if (*t21) {
            if (sweep <= 0 && karg.empty())
                throw std::invalid_argument("verify-t21 needs either K v u or --sweep N");
            return run_verify_t21(opt, karg, v, u, sweep);
        }
        if (*scan) return run_switch_scan(opt, garg);
        if (*sapply) return run_switch_apply(opt, garg, s, sg1, sg2, sh1, sh2);
        if (*t32) return run_verify_t32(opt, garg, s, sg1, sg2, sh1, sh2);
        if (*coro) return run_corollary(opt, garg, s, sg1, sg2, sh1, sh2, u, karg, v);
        if (*mine_cmd) return run_mine(opt, n, out_path, dump_path);
        std::cerr << "no subcommand selected\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
