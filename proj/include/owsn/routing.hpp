#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "owsn/isl_topology.hpp"
#include "owsn/latency_model.hpp"

// Shortest-propagation-delay routing over the ISL graph between ground
// endpoints. Edge weight is geometric distance; with a uniform signal
// speed that is the same ordering as delay.

namespace owsn {

struct GroundPoint {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    std::optional<std::string> name;

    // Validates latitude and folds longitude into (-180, 180].
    void normalize();
};

// Earth-surface position of the point at radius R, same inertial frame
// as the satellites (the Earth is treated as non-rotating here).
Vec3 surface_position(const GroundPoint& g, const EarthModel& earth);

struct RoutePath {
    SatelliteId ingress;
    SatelliteId egress;
    std::vector<SatelliteId> hops;      // ingress first, egress last
    std::vector<double> cumulative_km;  // ISL distance from ingress, per hop
    double total_distance_km = 0.0;     // ISL segment only
    double latency_ms = 0.0;            // total_distance_km at vacuum speed
};

// Satellite with the smallest slant distance to the ground point, ties
// broken by (plane, slot). min_elevation_deg, when given, restricts the
// candidates to satellites at least that high above the local horizon.
// Throws infeasible_error when the point lies outside the latitude band
// the inclination covers, or no satellite clears the mask.
SatelliteId attach_ground(const GroundPoint& g, const ConstellationSpec& spec,
                          const std::vector<SatelliteState>& states, const EarthModel& earth,
                          std::optional<double> min_elevation_deg = {});

// Distance-weighted Dijkstra with a deterministic lexicographic
// tie-break on the node sequence. nullopt when dst is unreachable.
std::optional<RoutePath> shortest_path(const IslGraph& graph, SatelliteId src, SatelliteId dst);

struct EndToEndResult {
    RoutePath path;
    double ingress_slant_km = 0.0;
    double egress_slant_km = 0.0;
    double satellite_latency_ms = 0.0;    // slants + ISL path at vacuum speed
    double terrestrial_latency_ms = 0.0;  // great circle at fiber speed
};

EndToEndResult end_to_end(const GroundPoint& a, const GroundPoint& b, const IslGraph& graph,
                          const std::vector<SatelliteState>& states, const EarthModel& earth,
                          const UseCaseScenario& scenario,
                          std::optional<double> min_elevation_deg = {});

// Text report: one line `hop_index,plane,slot,cum_distance_km` per hop
// followed by `total_km,sat_ms,terr_ms` (total includes the slants).
void write_route_report(std::ostream& out, const EndToEndResult& result);

}  // namespace owsn
