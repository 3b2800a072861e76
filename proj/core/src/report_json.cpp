#include "distspec/report_json.hpp"

#include <json.hpp>

namespace distspec {

namespace {

using json = nlohmann::ordered_json;

// exact coefficients: JSON number when it fits int64, decimal string beyond
json coeff_to_json(const BigInt& c) {
    static const BigInt lo{std::numeric_limits<std::int64_t>::min()};
    static const BigInt hi{std::numeric_limits<std::int64_t>::max()};
    if (c >= lo && c <= hi) return json(static_cast<std::int64_t>(c));
    return json(c.str());
}

json charpoly_to_json(const CharPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs) arr.push_back(coeff_to_json(c));
    return arr;
}

json tuple_to_json(const SwitchTuple& t) {
    json j;
    j["s"] = t.s;
    j["g"] = {t.g1, t.g2};
    j["h"] = {t.h1, t.h2};
    j["k"] = t.k;
    j["A"] = t.a;
    j["B"] = t.b;
    return j;
}

json report_to_json(const PerturbationReport& r) {
    json j;
    j["pairs"] = json::array();
    for (const auto& rec : r.records) {
        json e;
        e["lambda"] = rec.lambda;
        e["residual_before"] = rec.residual_before;
        e["residual_after"] = rec.residual_after;
        e["alpha"] = rec.alpha;
        e["beta"] = rec.beta;
        j["pairs"].push_back(e);
    }
    j["skipped"] = r.skipped;
    j["max_residual_after"] = r.max_residual_after;
    j["tolerance"] = r.tolerance;
    j["cospectral"] = r.cospectral;
    j["perturbation_checked"] = r.perturbation_checked;
    j["passed"] = r.passed;
    return j;
}

}  // namespace

std::string charpoly_json(const CharPoly& p) { return charpoly_to_json(p).dump(); }

std::string switch_tuple_json(const SwitchTuple& t) { return tuple_to_json(t).dump(); }

std::string perturbation_report_json(const PerturbationReport& r) { return report_to_json(r).dump(); }

std::string search_report_json(const SearchReport& r) {
    json j;
    j["n"] = r.n;
    j["connected_count"] = r.connected_count;
    j["class_count"] = r.classes.size();
    j["classes"] = json::array();
    for (const auto& cls : r.classes) {
        json c;
        c["charpoly"] = charpoly_to_json(cls.poly);
        c["graphs"] = cls.graphs;
        c["pairs"] = json::array();
        for (const auto& p : cls.pairs) {
            json e;
            e["i"] = p.i;
            e["j"] = p.j;
            e["edge_counts"] = {p.info.edge_counts[0], p.info.edge_counts[1]};
            e["bipartite"] = {p.info.bipartite[0], p.info.bipartite[1]};
            e["switching_explained"] = p.info.switching_explained;
            if (p.info.certificate) {
                json cert;
                cert["source"] = p.info.certificate->source;
                cert["tuple"] = tuple_to_json(p.info.certificate->tuple);
                e["switch_certificate"] = cert;
            } else {
                e["switch_certificate"] = nullptr;
            }
            c["pairs"].push_back(e);
        }
        j["classes"].push_back(c);
    }
    return j.dump();
}

}  // namespace distspec
