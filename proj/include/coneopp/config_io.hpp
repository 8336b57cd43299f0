// JSON config parsing: a cone (dimension + generators, rationals as
// strings) and optionally a module over it, either a list of offsets or
// the opposite of such a list. Parse failures throw invalid_argument with
// a message naming the offending field; the CLI turns those into input
// errors.
#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coneopp/cone.hpp"
#include "coneopp/lattice_module.hpp"

namespace coneopp {

using Json = nlohmann::json;

struct ProblemConfig {
    Cone cone;
    ModuleExpr module; // defaults to the cone itself (single zero offset)
    Json echo;         // the config as parsed, for report replay
};

namespace detail {

inline Rational parse_scalar(const Json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw std::invalid_argument("config field " + where +
                                " must be a rational string like \"3/2\" or an integer");
}

inline RatVec parse_rational_vector(const Json& arr, int dim, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        throw std::invalid_argument("config field " + where + " must be an array of length " +
                                    std::to_string(dim));
    RatVec v;
    v.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        v.push_back(parse_scalar(arr[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline LatticePoint parse_lattice_vector(const Json& arr, int dim, const std::string& where) {
    RatVec v = parse_rational_vector(arr, dim, where);
    LatticePoint p;
    p.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_integer())
            throw std::invalid_argument("config field " + where + "[" + std::to_string(i) +
                                        "] must be an integer lattice coordinate");
        p.push_back(v[i].num());
    }
    return p;
}

} // namespace detail

inline Cone parse_cone(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
        throw std::invalid_argument("config: cone needs \"dim\" and \"generators\"");
    if (!j["dim"].is_number_integer())
        throw std::invalid_argument("config: cone dim must be an integer");
    const int dim = j["dim"].get<int>();
    if (!j["generators"].is_array() || j["generators"].empty())
        throw std::invalid_argument("config: cone generators must be a nonempty array");
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < j["generators"].size(); ++i)
        gens.push_back(detail::parse_rational_vector(
            j["generators"][i], dim, "cone.generators[" + std::to_string(i) + "]"));
    return cone_from_generators(dim, gens);
}

inline ModuleExpr parse_module(const Json& j, const Cone& cone) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("config: module needs a \"kind\"");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "cone") {
        if (!j.contains("offsets") || !j["offsets"].is_array() || j["offsets"].empty())
            throw std::invalid_argument("config: cone module needs a nonempty \"offsets\" array");
        std::vector<LatticePoint> offsets;
        for (std::size_t i = 0; i < j["offsets"].size(); ++i)
            offsets.push_back(detail::parse_lattice_vector(
                j["offsets"][i], cone.dim, "module.offsets[" + std::to_string(i) + "]"));
        return module_from_offsets(cone, offsets);
    }
    if (kind == "opposite") {
        if (!j.contains("inner"))
            throw std::invalid_argument("config: opposite module needs an \"inner\" module");
        ModuleExpr inner = parse_module(j["inner"], cone);
        if (inner.opposed)
            throw std::invalid_argument("config: opposite modules do not nest");
        return opposite(inner);
    }
    throw std::invalid_argument("config: module kind must be \"cone\" or \"opposite\"");
}

inline ProblemConfig parse_config_json(const Json& j) {
    if (!j.is_object() || !j.contains("cone"))
        throw std::invalid_argument("config: top level needs a \"cone\" object");
    ProblemConfig pc;
    pc.cone = parse_cone(j["cone"]);
    if (j.contains("module")) {
        pc.module = parse_module(j["module"], pc.cone);
    } else {
        pc.module = module_from_offsets(
            pc.cone, {LatticePoint(static_cast<std::size_t>(pc.cone.dim), 0)});
    }
    pc.echo = j;
    return pc;
}

inline ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
    }
    return parse_config_json(j);
}

} // namespace coneopp
