#pragma once

#include <optional>
#include <string>

#include "owsn/constellation.hpp"
#include "owsn/isl_topology.hpp"
#include "owsn/latency_model.hpp"

// JSON scenario configuration shared by the CLI subcommands. All keys
// are snake_case and unknown keys are hard errors.

namespace owsn {

struct ScenarioConfig {
    ConstellationSpec constellation = presets().at("starlink-phase1-modified");
    EarthModel earth = EarthModel::latency_preset();
    TopologyStrategy strategy = TopologyStrategy::plus_grid;
    InterPlaneRule inter_plane_rule = InterPlaneRule::nearest;
    std::optional<TerminalSpec> terminal;
    double setup_time_s = 10.0;
    double time_s = 0.0;
    std::optional<double> min_elevation_deg;
    UseCaseScenario use_case;

    static ScenarioConfig from_json_text(const std::string& text);
    static ScenarioConfig load(const std::string& path);
};

}  // namespace owsn
