// Report assembly: every run produces a JSON document whose serialization
// is byte-stable for fixed inputs and seed (object keys are emitted in
// sorted order, points and rationals in canonical form).
#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coneopp/check_report.hpp"
#include "coneopp/lattice_module.hpp"
#include "coneopp/version.hpp"

namespace coneopp {

using Json = nlohmann::json;

struct ResultEntry {
    std::string name;
    std::string status; // PASS | FAIL | INCONCLUSIVE
    Json data;
};

struct Report {
    std::string command;
    Json inputs;
    std::vector<ResultEntry> results;
    std::uint64_t seed = 0;
    int window = 10;
    int cases = 100;
    double tol = 1e-9;
    std::string version = kVersion;
};

// --------------------------------------------------------------------------
// JSON views of the library's value types

inline Json point_json(const LatticePoint& p) {
    Json a = Json::array();
    for (auto c : p) a.push_back(c);
    return a;
}

inline Json points_json(const std::vector<LatticePoint>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(point_json(p));
    return a;
}

inline Json ratvec_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

inline Json cone_json(const Cone& c) {
    Json j;
    j["dim"] = c.dim;
    j["generators_primitive"] = points_json(c.gens_primitive);
    j["halfspaces"] = points_json(c.halfspaces);
    j["pointed"] = c.pointed;
    j["spanning"] = c.spanning;
    return j;
}

inline Json module_json(const ModuleExpr& m) {
    Json j;
    j["kind"] = m.opposed ? "opposite" : "cone";
    j["offsets"] = points_json(m.offsets);
    return j;
}

inline Json extreme_json(const ExtremeReport& r) {
    Json j;
    j["analyzed"] = r.analyzed_opposite ? "opposite" : "cone";
    j["extreme_points"] = points_json(r.points);
    j["count"] = r.points.size();
    if (r.witness) j["witness"] = ratvec_json(*r.witness);
    j["certificate"] = r.certificate;
    return j;
}

inline Json decision_json(const Decision& d) {
    Json j;
    j["verdict"] = verdict_name(d.verdict);
    j["certificate"] = d.certificate;
    if (d.shift) j["shift"] = point_json(*d.shift);
    if (!d.rejected_candidates.empty()) {
        Json rc = Json::array();
        for (const auto& [z, u] : d.rejected_candidates) {
            Json e;
            e["shift"] = point_json(z);
            e["mismatch_point"] = point_json(u);
            rc.push_back(e);
        }
        j["rejected_candidates"] = rc;
    }
    if (d.extreme_first) j["extreme_first"] = extreme_json(*d.extreme_first);
    if (d.extreme_second) j["extreme_second"] = extreme_json(*d.extreme_second);
    if (d.verdict != Verdict::YES) {
        j["window_minimal_first"] = points_json(d.minimal_first);
        j["window_minimal_second"] = points_json(d.minimal_second);
    }
    return j;
}

inline Json check_json(const CheckReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["checks"] = r.checks;
    j["max_error"] = r.max_error;
    if (!r.failures.empty()) j["failures"] = r.failures;
    return j;
}

inline ResultEntry entry_from_check(const std::string& name, const CheckReport& r) {
    return ResultEntry{name, r.pass ? "PASS" : "FAIL", check_json(r)};
}

// --------------------------------------------------------------------------
// Assembly

inline Json report_json(const Report& rep) {
    Json j;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    j["seed"] = rep.seed;
    j["window"] = rep.window;
    j["cases"] = rep.cases;
    j["tol"] = rep.tol;
    j["version"] = rep.version;
    Json rs = Json::array();
    for (const auto& e : rep.results) {
        Json ej;
        ej["name"] = e.name;
        ej["status"] = e.status;
        ej["data"] = e.data;
        rs.push_back(ej);
    }
    j["results"] = rs;
    std::string overall = "PASS";
    for (const auto& e : rep.results) {
        if (e.status == "FAIL") {
            overall = "FAIL";
            break;
        }
        if (e.status == "INCONCLUSIVE") overall = "INCONCLUSIVE";
    }
    j["overall"] = overall;
    return j;
}

inline int exit_code(const Report& rep) {
    bool inconclusive = false;
    for (const auto& e : rep.results) {
        if (e.status == "FAIL") return 1;
        if (e.status == "INCONCLUSIVE") inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

inline std::string render_report(const Report& rep) {
    return report_json(rep).dump(2) + "\n";
}

inline void write_report(const Report& rep, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << render_report(rep);
}

} // namespace coneopp
