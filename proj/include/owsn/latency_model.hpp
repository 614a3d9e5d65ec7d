#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "owsn/errors.hpp"
#include "owsn/geometry.hpp"

// Propagation-delay comparison between an along-plane satellite path
// (sum of per-hop chords at vacuum light speed, plus a fixed
// ingress/egress distance) and a terrestrial fiber path (great-circle
// arc at c/n). Only propagation delay is modeled.

namespace owsn {

struct MediumModel {
    std::string name;
    double refractive_index = 1.0;
    double speed_km_s = kVacuumLightSpeedKmS;

    static MediumModel from_index(std::string name, double n);
};

double fiber_speed_km_s(double refractive_index);

struct UseCaseScenario {
    double altitude_km = 550.0;
    double earth_radius_km = 6378.0;
    double per_hop_theta_deg = 5.45;
    double ingress_egress_km = 1100.0;
    double vacuum_speed_km_s = kVacuumLightSpeedKmS;
    MediumModel fiber = MediumModel::from_index("corning-smf-1310nm", 1.4675);

    void validate() const;
};

struct SatelliteLeg {
    double hop_distance_km = 0.0;   // sum of per-hop chords
    double end_to_end_km = 0.0;     // + ingress/egress
    double latency_ms = 0.0;
};

struct TerrestrialLeg {
    double distance_km = 0.0;  // hop distance and end-to-end coincide
    double latency_ms = 0.0;
};

SatelliteLeg satellite_row(int n_hops, const UseCaseScenario& scenario);
TerrestrialLeg terrestrial_row(int n_hops, const UseCaseScenario& scenario);

struct LatencyRow {
    int hops = 0;
    double theta_deg = 0.0;
    double sat_hop_distance_km = 0.0;
    double sat_end_to_end_km = 0.0;
    double sat_latency_ms = 0.0;
    double terr_distance_km = 0.0;
    double terr_latency_ms = 0.0;
};

std::vector<LatencyRow> comparison_table(int max_hops, const UseCaseScenario& scenario);

struct CrossoverResult {
    int first_winning_hops = 0;
    double terrestrial_distance_km = 0.0;
};

// Smallest hop count at which the satellite path's latency drops below
// the terrestrial one. The latency gap is affine in the hop count, so
// the crossover either exists and is unique or never happens; the latter
// raises infeasible_error.
CrossoverResult crossover(const UseCaseScenario& scenario);

// CSV report: hops,theta_deg,sat_hop_km,sat_e2e_km,sat_ms,terr_km,terr_ms
// with integer-km distances, 2-decimal theta and latencies, rounding
// half away from zero.
void write_latency_csv(std::ostream& out, const std::vector<LatencyRow>& rows);

}  // namespace owsn
