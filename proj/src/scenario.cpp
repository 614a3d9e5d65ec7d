#include "owsn/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace owsn {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
    }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw std::invalid_argument("config: missing key '" + key + "' in " + where);
    if (!obj.at(key).is_number())
        throw std::invalid_argument("config: '" + key + "' in " + where + " must be a number");
    return obj.at(key).get<double>();
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw std::invalid_argument("config: missing key '" + key + "' in " + where);
    if (!obj.at(key).is_number_integer())
        throw std::invalid_argument("config: '" + key + "' in " + where + " must be an integer");
    return obj.at(key).get<int>();
}

ConstellationSpec parse_constellation(const json& node) {
    if (node.is_string()) {
        const auto name = node.get<std::string>();
        const auto& table = presets();
        auto it = table.find(name);
        if (it == table.end())
            throw std::invalid_argument("config: unknown constellation preset '" + name + "'");
        return it->second;
    }
    if (!node.is_object())
        throw std::invalid_argument("config: constellation must be a preset name or object");

    reject_unknown_keys(node,
                        {"inclination_deg", "altitude_km", "num_planes", "sats_per_plane",
                         "phasing_factor", "raan_spread_deg"},
                        "constellation");
    ConstellationSpec spec;
    spec.inclination_deg = require_number(node, "inclination_deg", "constellation");
    spec.altitude_km = require_number(node, "altitude_km", "constellation");
    spec.num_planes = require_int(node, "num_planes", "constellation");
    spec.sats_per_plane = require_int(node, "sats_per_plane", "constellation");
    if (node.contains("phasing_factor"))
        spec.phasing_factor = require_int(node, "phasing_factor", "constellation");
    if (node.contains("raan_spread_deg"))
        spec.raan_spread_deg = require_number(node, "raan_spread_deg", "constellation");
    spec.validate();
    return spec;
}

EarthModel parse_earth(const json& node) {
    if (node.is_string()) {
        const auto name = node.get<std::string>();
        if (name == "latency") return EarthModel::latency_preset();
        if (name == "visibility") return EarthModel::visibility_preset();
        throw std::invalid_argument("config: unknown earth_model preset '" + name +
                                    "' (expected latency or visibility)");
    }
    if (!node.is_object())
        throw std::invalid_argument("config: earth_model must be a preset name or object");

    reject_unknown_keys(
        node, {"radius_km", "occlusion_altitude_km", "gravitational_parameter_km3_s2"},
        "earth_model");
    EarthModel earth = EarthModel::latency_preset();
    earth.radius_km = require_number(node, "radius_km", "earth_model");
    if (node.contains("occlusion_altitude_km"))
        earth.occlusion_altitude_km = require_number(node, "occlusion_altitude_km", "earth_model");
    if (node.contains("gravitational_parameter_km3_s2"))
        earth.gravitational_parameter_km3_s2 =
            require_number(node, "gravitational_parameter_km3_s2", "earth_model");
    earth.validate();
    return earth;
}

ScenarioConfig parse_root(const json& root) {
    reject_unknown_keys(root,
                        {"constellation", "earth_model", "strategy", "inter_plane_rule",
                         "terminal", "setup_time_s", "time_s", "min_elevation_deg", "use_case"},
                        "top level");

    ScenarioConfig cfg;
    if (root.contains("constellation")) cfg.constellation = parse_constellation(root.at("constellation"));
    if (root.contains("earth_model")) cfg.earth = parse_earth(root.at("earth_model"));

    if (root.contains("strategy")) {
        const auto s = root.at("strategy").get<std::string>();
        if (s == "plus_grid")
            cfg.strategy = TopologyStrategy::plus_grid;
        else if (s == "plus_grid_crossing")
            cfg.strategy = TopologyStrategy::plus_grid_crossing;
        else
            throw std::invalid_argument("config: unknown strategy '" + s + "'");
    }
    if (root.contains("inter_plane_rule")) {
        const auto s = root.at("inter_plane_rule").get<std::string>();
        if (s == "nearest")
            cfg.inter_plane_rule = InterPlaneRule::nearest;
        else if (s == "same_slot")
            cfg.inter_plane_rule = InterPlaneRule::same_slot;
        else
            throw std::invalid_argument("config: unknown inter_plane_rule '" + s + "'");
    }
    if (root.contains("terminal")) {
        const auto name = root.at("terminal").get<std::string>();
        cfg.terminal = find_terminal(name);
        if (!cfg.terminal)
            throw std::invalid_argument("config: unknown terminal '" + name + "'");
    }
    if (root.contains("setup_time_s")) {
        cfg.setup_time_s = require_number(root, "setup_time_s", "top level");
        if (cfg.setup_time_s < 0.0)
            throw std::invalid_argument("config: setup_time_s must be >= 0");
    }
    if (root.contains("time_s")) {
        cfg.time_s = require_number(root, "time_s", "top level");
        if (cfg.time_s < 0.0) throw std::invalid_argument("config: time_s must be >= 0");
    }
    if (root.contains("min_elevation_deg"))
        cfg.min_elevation_deg = require_number(root, "min_elevation_deg", "top level");

    if (root.contains("use_case")) {
        const json& uc = root.at("use_case");
        if (!uc.is_object()) throw std::invalid_argument("config: use_case must be an object");
        reject_unknown_keys(
            uc, {"per_hop_theta_deg", "ingress_egress_km", "fiber_refractive_index"}, "use_case");
        if (uc.contains("per_hop_theta_deg"))
            cfg.use_case.per_hop_theta_deg = require_number(uc, "per_hop_theta_deg", "use_case");
        if (uc.contains("ingress_egress_km"))
            cfg.use_case.ingress_egress_km = require_number(uc, "ingress_egress_km", "use_case");
        if (uc.contains("fiber_refractive_index"))
            cfg.use_case.fiber = MediumModel::from_index(
                "fiber", require_number(uc, "fiber_refractive_index", "use_case"));
        cfg.use_case.validate();
    }
    return cfg;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");

    try {
        return parse_root(root);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

}  // namespace owsn
