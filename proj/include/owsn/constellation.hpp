#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "owsn/geometry.hpp"

// Uniform circular-orbit constellation generation and two-body
// propagation. A constellation is fully described by inclination,
// altitude, plane count, satellites per plane, a phasing factor, and
// the right-ascension span of the planes.

namespace owsn {

struct ConstellationSpec {
    double inclination_deg = 0.0;
    double altitude_km = 0.0;
    int num_planes = 0;
    int sats_per_plane = 0;
    int phasing_factor = 0;       // inter-plane slot offset numerator
    double raan_spread_deg = 360.0;

    void validate() const;
    int total_satellites() const { return num_planes * sats_per_plane; }
};

double plane_spacing_deg(const ConstellationSpec& spec);
double slot_spacing_deg(const ConstellationSpec& spec);

struct SatelliteId {
    int plane = 0;
    int slot = 0;

    auto operator<=>(const SatelliteId&) const = default;
};

// Dense node numbering plane*sats_per_plane + slot, bounds-checked.
int node_index(const ConstellationSpec& spec, SatelliteId id);
SatelliteId id_from_index(const ConstellationSpec& spec, int index);

struct SatelliteState {
    SatelliteId id;
    Vec3 position_km;
    Vec3 velocity_km_s;
    bool ascending = true;  // latitude rate >= 0
};

// All satellites of the constellation at epoch + t_s, plane-major order.
// Epoch convention: plane 0's ascending node lies on the +x axis and
// slot 0 of plane 0 sits at its ascending node at t = 0.
std::vector<SatelliteState> generate(const ConstellationSpec& spec, const EarthModel& earth,
                                     double t_s);

// Circular two-body propagation: rotates position and velocity about the
// orbit normal by omega*dt, preserving altitude and speed.
SatelliteState propagate(const SatelliteState& state, double dt_s);

// Latitude rate > 0, with the turnaround tie resolved to ascending.
bool is_ascending(const SatelliteState& state);

// Named presets: the SpaceX LEO filings plus the 40x40 textbook example.
const std::map<std::string, ConstellationSpec>& presets();

// CSV snapshot: plane,slot,x_km,y_km,z_km,vx_km_s,vy_km_s,vz_km_s,ascending
// with fixed 6-decimal floats and ascending as 0/1.
void write_snapshot_csv(std::ostream& out, const std::vector<SatelliteState>& states);

}  // namespace owsn
