#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "owsn/constellation.hpp"
#include "owsn/csv.hpp"
#include "owsn/errors.hpp"
#include "owsn/isl_topology.hpp"
#include "owsn/latency_model.hpp"
#include "owsn/routing.hpp"
#include "owsn/scenario.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

owsn::ScenarioConfig load_config(const std::string& path) {
    if (path.empty()) return owsn::ScenarioConfig{};
    return owsn::ScenarioConfig::load(path);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

std::pair<double, double> parse_lat_lon(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected lat,lon but got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::string lat_text = text.substr(0, comma);
        const std::string lon_text = text.substr(comma + 1);
        const double lat = std::stod(lat_text, &used);
        if (used != lat_text.size()) throw std::invalid_argument("");
        const double lon = std::stod(lon_text, &used);
        if (used != lon_text.size()) throw std::invalid_argument("");
        return {lat, lon};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected numeric lat,lon but got '" + text + "'");
    }
}

std::pair<owsn::SatelliteId, owsn::SatelliteId> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected pA:sA,pB:sB but got '" + text + "'");
    auto parse_one = [](const std::string& part) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected plane:slot but got '" + part + "'");
        try {
            return owsn::SatelliteId{std::stoi(part.substr(0, colon)),
                                     std::stoi(part.substr(colon + 1))};
        } catch (const std::exception&) {
            throw std::invalid_argument("expected integer plane:slot but got '" + part + "'");
        }
    };
    return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optical wireless satellite network simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* constellation_cmd = app.add_subcommand("constellation", "Constellation snapshots");
    constellation_cmd->require_subcommand(1);
    auto* generate_cmd = constellation_cmd->add_subcommand("generate", "Generate a snapshot CSV");
    std::string gen_preset = "starlink-phase1-modified";
    std::string gen_config, gen_out;
    double gen_time = 0.0;
    generate_cmd->add_option("--preset", gen_preset, "Constellation preset name");
    generate_cmd->add_option("--config", gen_config, "Scenario config JSON (overrides --preset)");
    generate_cmd->add_option("--time", gen_time, "Snapshot time in seconds");
    generate_cmd->add_option("--out", gen_out, "Output CSV path (stdout when omitted)");

    auto* topology_cmd = app.add_subcommand("topology", "ISL graph construction");
    topology_cmd->require_subcommand(1);
    auto* build_cmd = topology_cmd->add_subcommand("build", "Build the ISL edge list CSV");
    std::string build_config, build_out;
    build_cmd->add_option("--config", build_config, "Scenario config JSON");
    build_cmd->add_option("--out", build_out, "Output CSV path (stdout when omitted)");

    auto* latency_cmd = app.add_subcommand("latency", "Satellite vs fiber latency model");
    latency_cmd->require_subcommand(1);
    auto* table_cmd = latency_cmd->add_subcommand("table", "Hop-by-hop comparison CSV");
    int table_hops = 10;
    std::string table_config, table_out;
    table_cmd->add_option("--hops", table_hops, "Number of rows");
    table_cmd->add_option("--config", table_config, "Scenario config JSON");
    table_cmd->add_option("--out", table_out, "Output CSV path (stdout when omitted)");
    auto* crossover_cmd =
        latency_cmd->add_subcommand("crossover", "First hop count won by satellite");
    std::string crossover_config;
    crossover_cmd->add_option("--config", crossover_config, "Scenario config JSON");

    auto* route_cmd = app.add_subcommand("route", "Ground-to-ground shortest-delay route");
    std::string route_from, route_to, route_config;
    route_cmd->add_option("--from", route_from, "Source lat,lon in degrees")->required();
    route_cmd->add_option("--to", route_to, "Destination lat,lon in degrees")->required();
    route_cmd->add_option("--config", route_config, "Scenario config JSON");

    auto* link_cmd = app.add_subcommand("link", "Per-pair link dynamics");
    link_cmd->require_subcommand(1);
    std::string pair_text, link_config;
    double horizon_s = 6000.0, step_s = 10.0, carrier_hz = owsn::kDefaultCarrierHz;
    auto* doppler_cmd = link_cmd->add_subcommand("doppler", "Doppler shift in Hz");
    auto* paa_cmd = link_cmd->add_subcommand("paa", "Point-ahead angle in radians");
    auto* windows_cmd = link_cmd->add_subcommand("windows", "Contact windows CSV");
    for (auto* cmd : {doppler_cmd, paa_cmd, windows_cmd}) {
        cmd->add_option("--pair", pair_text, "Satellite pair pA:sA,pB:sB")->required();
        cmd->add_option("--config", link_config, "Scenario config JSON");
    }
    doppler_cmd->add_option("--carrier-hz", carrier_hz, "Optical carrier frequency");
    windows_cmd->add_option("--carrier-hz", carrier_hz, "Optical carrier frequency");
    windows_cmd->add_option("--horizon", horizon_s, "Scan horizon in seconds");
    windows_cmd->add_option("--step", step_s, "Scan step in seconds");

    auto* terminals_cmd = app.add_subcommand("terminals", "Laser terminal catalog");
    terminals_cmd->require_subcommand(1);
    auto* list_cmd = terminals_cmd->add_subcommand("list", "Print the catalog CSV");
    auto* feasible_cmd = terminals_cmd->add_subcommand("feasible", "Catalog entries for a link");
    double feas_distance = 0.0, feas_capacity = 0.0;
    feasible_cmd->add_option("--distance", feas_distance, "Link distance in km")->required();
    feasible_cmd->add_option("--capacity", feas_capacity, "Required capacity in Gbps")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (generate_cmd->parsed()) {
            owsn::ConstellationSpec spec;
            owsn::EarthModel earth = owsn::EarthModel::latency_preset();
            if (!gen_config.empty()) {
                const auto cfg = load_config(gen_config);
                spec = cfg.constellation;
                earth = cfg.earth;
            } else {
                const auto& table = owsn::presets();
                auto it = table.find(gen_preset);
                if (it == table.end())
                    throw std::invalid_argument("unknown constellation preset '" + gen_preset +
                                                "'");
                spec = it->second;
            }
            const auto states = owsn::generate(spec, earth, gen_time);
            std::ostringstream out;
            owsn::write_snapshot_csv(out, states);
            write_output(gen_out, out.str());
        } else if (build_cmd->parsed()) {
            const auto cfg = load_config(build_config);
            const auto states = owsn::generate(cfg.constellation, cfg.earth, cfg.time_s);
            auto graph = owsn::build_topology(cfg.constellation, states, cfg.strategy, cfg.earth,
                                              cfg.terminal, cfg.inter_plane_rule);
            graph.time_s = cfg.time_s;
            std::ostringstream out;
            owsn::write_edges_csv(out, graph);
            write_output(build_out, out.str());
        } else if (table_cmd->parsed()) {
            const auto cfg = load_config(table_config);
            const auto rows = owsn::comparison_table(table_hops, cfg.use_case);
            std::ostringstream out;
            owsn::write_latency_csv(out, rows);
            write_output(table_out, out.str());
        } else if (crossover_cmd->parsed()) {
            const auto cfg = load_config(crossover_config);
            const auto result = owsn::crossover(cfg.use_case);
            std::cout << result.first_winning_hops << ','
                      << owsn::csv::round_half_away(result.terrestrial_distance_km) << "\n";
        } else if (route_cmd->parsed()) {
            const auto cfg = load_config(route_config);
            const auto [lat_a, lon_a] = parse_lat_lon(route_from);
            const auto [lat_b, lon_b] = parse_lat_lon(route_to);
            const auto states = owsn::generate(cfg.constellation, cfg.earth, cfg.time_s);
            auto graph = owsn::build_topology(cfg.constellation, states, cfg.strategy, cfg.earth,
                                              cfg.terminal, cfg.inter_plane_rule);
            graph.time_s = cfg.time_s;
            const auto result =
                owsn::end_to_end({lat_a, lon_a, {}}, {lat_b, lon_b, {}}, graph, states, cfg.earth,
                                 cfg.use_case, cfg.min_elevation_deg);
            std::ostringstream out;
            owsn::write_route_report(out, result);
            std::cout << out.str();
        } else if (doppler_cmd->parsed() || paa_cmd->parsed()) {
            const auto cfg = load_config(link_config);
            const auto [id_a, id_b] = parse_pair(pair_text);
            const auto states = owsn::generate(cfg.constellation, cfg.earth, cfg.time_s);
            const auto& sat_a =
                states[static_cast<std::size_t>(owsn::node_index(cfg.constellation, id_a))];
            const auto& sat_b =
                states[static_cast<std::size_t>(owsn::node_index(cfg.constellation, id_b))];
            if (doppler_cmd->parsed())
                std::cout << owsn::csv::fixed(owsn::doppler_shift(sat_a, sat_b, carrier_hz), 3)
                          << "\n";
            else
                std::cout << owsn::csv::compact(owsn::point_ahead_angle(sat_a, sat_b)) << "\n";
        } else if (windows_cmd->parsed()) {
            const auto cfg = load_config(link_config);
            const auto [id_a, id_b] = parse_pair(pair_text);
            const auto windows =
                owsn::contact_windows(id_a, id_b, cfg.constellation, cfg.earth, horizon_s, step_s,
                                      cfg.terminal, cfg.setup_time_s, carrier_hz);
            std::cout << "start_s,end_s,min_distance_km,max_abs_doppler_hz\n";
            for (const auto& w : windows)
                std::cout << owsn::csv::fixed(w.start_s, 1) << ',' << owsn::csv::fixed(w.end_s, 1)
                          << ',' << owsn::csv::fixed(w.min_distance_km, 6) << ','
                          << owsn::csv::fixed(w.max_abs_doppler_hz, 3) << "\n";
        } else if (list_cmd->parsed()) {
            std::ostringstream out;
            owsn::write_terminals_csv(out, owsn::terminal_catalog());
            std::cout << out.str();
        } else if (feasible_cmd->parsed()) {
            std::ostringstream out;
            owsn::write_terminals_csv(out, owsn::feasible_terminals(feas_distance, feas_capacity));
            std::cout << out.str();
        }
    } catch (const owsn::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
