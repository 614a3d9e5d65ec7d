#include "owsn/latency_model.hpp"

#include <cmath>

#include "owsn/csv.hpp"

namespace owsn {

MediumModel MediumModel::from_index(std::string name, double n) {
    return {std::move(name), n, fiber_speed_km_s(n)};
}

double fiber_speed_km_s(double refractive_index) {
    if (!(refractive_index >= 1.0))
        throw std::domain_error("fiber_speed_km_s: refractive index must be >= 1");
    return kVacuumLightSpeedKmS / refractive_index;
}

void UseCaseScenario::validate() const {
    if (!(altitude_km > 0.0) || !(earth_radius_km > 0.0) || !(per_hop_theta_deg > 0.0) ||
        !(ingress_egress_km >= 0.0) || !(vacuum_speed_km_s > 0.0))
        throw std::invalid_argument("UseCaseScenario: all parameters must be positive");
    if (!(fiber.refractive_index >= 1.0))
        throw std::invalid_argument("UseCaseScenario: fiber index must be >= 1");
}

SatelliteLeg satellite_row(int n_hops, const UseCaseScenario& scenario) {
    scenario.validate();
    if (n_hops < 1) throw std::invalid_argument("satellite_row: n_hops must be >= 1");

    // The path length is the sum of per-hop chords, not the chord of the
    // total angle.
    const double orbit_radius = scenario.earth_radius_km + scenario.altitude_km;
    const double hop = chord_distance(scenario.per_hop_theta_deg, orbit_radius);

    SatelliteLeg leg;
    leg.hop_distance_km = n_hops * hop;
    leg.end_to_end_km = leg.hop_distance_km + scenario.ingress_egress_km;
    leg.latency_ms = leg.end_to_end_km / scenario.vacuum_speed_km_s * 1000.0;
    return leg;
}

TerrestrialLeg terrestrial_row(int n_hops, const UseCaseScenario& scenario) {
    scenario.validate();
    if (n_hops < 1) throw std::invalid_argument("terrestrial_row: n_hops must be >= 1");

    TerrestrialLeg leg;
    leg.distance_km =
        arc_distance(n_hops * scenario.per_hop_theta_deg, scenario.earth_radius_km);
    leg.latency_ms = leg.distance_km / scenario.fiber.speed_km_s * 1000.0;
    return leg;
}

std::vector<LatencyRow> comparison_table(int max_hops, const UseCaseScenario& scenario) {
    if (max_hops < 1) throw std::invalid_argument("comparison_table: max_hops must be >= 1");

    std::vector<LatencyRow> rows;
    rows.reserve(static_cast<std::size_t>(max_hops));
    for (int n = 1; n <= max_hops; ++n) {
        const SatelliteLeg sat = satellite_row(n, scenario);
        const TerrestrialLeg terr = terrestrial_row(n, scenario);
        rows.push_back({n, n * scenario.per_hop_theta_deg, sat.hop_distance_km, sat.end_to_end_km,
                        sat.latency_ms, terr.distance_km, terr.latency_ms});
    }
    return rows;
}

CrossoverResult crossover(const UseCaseScenario& scenario) {
    scenario.validate();

    // latency gap(n) = n * slope + intercept, in milliseconds
    const double orbit_radius = scenario.earth_radius_km + scenario.altitude_km;
    const double hop_chord = chord_distance(scenario.per_hop_theta_deg, orbit_radius);
    const double hop_arc = arc_distance(scenario.per_hop_theta_deg, scenario.earth_radius_km);
    const double slope =
        (hop_chord / scenario.vacuum_speed_km_s - hop_arc / scenario.fiber.speed_km_s) * 1000.0;
    const double intercept = scenario.ingress_egress_km / scenario.vacuum_speed_km_s * 1000.0;

    if (!(slope < 0.0))
        throw infeasible_error(
            "no crossover: the satellite path never becomes faster than fiber");

    int n = static_cast<int>(std::floor(intercept / -slope)) + 1;
    if (n < 1) n = 1;
    // Guard against a boundary landing exactly on a grid point.
    while (n * slope + intercept >= 0.0) ++n;

    return {n, terrestrial_row(n, scenario).distance_km};
}

void write_latency_csv(std::ostream& out, const std::vector<LatencyRow>& rows) {
    out << "hops,theta_deg,sat_hop_km,sat_e2e_km,sat_ms,terr_km,terr_ms\n";
    for (const auto& r : rows) {
        out << r.hops << ',' << csv::fixed(r.theta_deg, 2) << ','
            << csv::round_half_away(r.sat_hop_distance_km) << ','
            << csv::round_half_away(r.sat_end_to_end_km) << ',' << csv::fixed(r.sat_latency_ms, 2)
            << ',' << csv::round_half_away(r.terr_distance_km) << ','
            << csv::fixed(r.terr_latency_ms, 2) << '\n';
    }
}

}  // namespace owsn
