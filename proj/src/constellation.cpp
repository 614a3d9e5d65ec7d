#include "owsn/constellation.hpp"

#include "owsn/csv.hpp"

namespace owsn {

void ConstellationSpec::validate() const {
    if (!(inclination_deg > 0.0 && inclination_deg <= 180.0))
        throw std::invalid_argument("ConstellationSpec: inclination_deg must be in (0, 180]");
    if (!(altitude_km > 0.0))
        throw std::invalid_argument("ConstellationSpec: altitude_km must be > 0");
    if (num_planes < 1) throw std::invalid_argument("ConstellationSpec: num_planes must be >= 1");
    if (sats_per_plane < 1)
        throw std::invalid_argument("ConstellationSpec: sats_per_plane must be >= 1");
    if (phasing_factor < 0 || phasing_factor >= num_planes)
        throw std::invalid_argument("ConstellationSpec: phasing_factor must be in [0, num_planes)");
    if (!(raan_spread_deg > 0.0 && raan_spread_deg <= 360.0))
        throw std::invalid_argument("ConstellationSpec: raan_spread_deg must be in (0, 360]");
}

double plane_spacing_deg(const ConstellationSpec& spec) {
    spec.validate();
    return spec.raan_spread_deg / spec.num_planes;
}

double slot_spacing_deg(const ConstellationSpec& spec) {
    spec.validate();
    return 360.0 / spec.sats_per_plane;
}

int node_index(const ConstellationSpec& spec, SatelliteId id) {
    if (id.plane < 0 || id.plane >= spec.num_planes || id.slot < 0 ||
        id.slot >= spec.sats_per_plane)
        throw std::invalid_argument("unknown satellite id " + std::to_string(id.plane) + ":" +
                                    std::to_string(id.slot));
    return id.plane * spec.sats_per_plane + id.slot;
}

SatelliteId id_from_index(const ConstellationSpec& spec, int index) {
    if (index < 0 || index >= spec.total_satellites())
        throw std::invalid_argument("satellite index out of range");
    return {index / spec.sats_per_plane, index % spec.sats_per_plane};
}

namespace {

// Position/velocity on a circular orbit with right ascension raan_rad,
// inclination incl_rad, and argument of latitude u_rad.
SatelliteState circular_state(SatelliteId id, double radius_km, double speed_km_s,
                              double raan_rad, double incl_rad, double u_rad) {
    const double cO = std::cos(raan_rad), sO = std::sin(raan_rad);
    const double cu = std::cos(u_rad), su = std::sin(u_rad);
    const double ci = std::cos(incl_rad), si = std::sin(incl_rad);

    SatelliteState s;
    s.id = id;
    s.position_km = Vec3{radius_km * (cO * cu - sO * su * ci),
                         radius_km * (sO * cu + cO * su * ci),
                         radius_km * (su * si)};
    s.velocity_km_s = Vec3{speed_km_s * (-cO * su - sO * cu * ci),
                           speed_km_s * (-sO * su + cO * cu * ci),
                           speed_km_s * (cu * si)};
    s.ascending = s.velocity_km_s.z >= 0.0;
    return s;
}

}  // namespace

std::vector<SatelliteState> generate(const ConstellationSpec& spec, const EarthModel& earth,
                                     double t_s) {
    spec.validate();
    earth.validate();
    if (!(t_s >= 0.0)) throw std::invalid_argument("generate: t_s must be >= 0");

    const double r = earth.radius_km + spec.altitude_km;
    const double omega = std::sqrt(earth.gravitational_parameter_km3_s2 / (r * r * r));
    const double speed = r * omega;
    const double incl = deg2rad(spec.inclination_deg);
    const double dplane = deg2rad(plane_spacing_deg(spec));
    const double dslot = deg2rad(slot_spacing_deg(spec));
    const double dphase =
        deg2rad(360.0 / (static_cast<double>(spec.num_planes) * spec.sats_per_plane));

    std::vector<SatelliteState> states;
    states.reserve(static_cast<std::size_t>(spec.total_satellites()));
    for (int p = 0; p < spec.num_planes; ++p) {
        const double raan = p * dplane;
        for (int s = 0; s < spec.sats_per_plane; ++s) {
            const double u = s * dslot + p * spec.phasing_factor * dphase + omega * t_s;
            states.push_back(circular_state({p, s}, r, speed, raan, incl, u));
        }
    }
    return states;
}

SatelliteState propagate(const SatelliteState& state, double dt_s) {
    if (!std::isfinite(dt_s)) throw std::invalid_argument("propagate: dt_s must be finite");

    const double r = norm(state.position_km);
    const double v = norm(state.velocity_km_s);
    if (r == 0.0 || v == 0.0) throw std::domain_error("propagate: degenerate state");

    const Vec3 n = normalized(cross(state.position_km, state.velocity_km_s));
    const double phi = (v / r) * dt_s;
    const double c = std::cos(phi), s = std::sin(phi);

    auto rotate = [&](const Vec3& x) {
        // Rodrigues rotation about the orbit normal.
        return x * c + cross(n, x) * s + n * (dot(n, x) * (1.0 - c));
    };

    SatelliteState out;
    out.id = state.id;
    out.position_km = rotate(state.position_km);
    out.velocity_km_s = rotate(state.velocity_km_s);
    out.ascending = out.velocity_km_s.z >= 0.0;
    return out;
}

bool is_ascending(const SatelliteState& state) { return state.velocity_km_s.z >= 0.0; }

const std::map<std::string, ConstellationSpec>& presets() {
    static const std::map<std::string, ConstellationSpec> table = {
        {"starlink-phase1-original", {53.0, 1150.0, 32, 50, 0, 360.0}},
        {"starlink-phase1-modified", {53.0, 550.0, 24, 66, 0, 360.0}},
        {"phase2-a", {53.8, 1110.0, 32, 50, 0, 360.0}},
        {"phase2-b", {74.0, 1130.0, 8, 50, 0, 360.0}},
        {"phase2-c", {81.0, 1275.0, 5, 75, 0, 360.0}},
        {"phase2-d", {70.0, 1325.0, 6, 75, 0, 360.0}},
        {"example-40x40", {53.0, 550.0, 40, 40, 0, 360.0}},
    };
    return table;
}

void write_snapshot_csv(std::ostream& out, const std::vector<SatelliteState>& states) {
    out << "plane,slot,x_km,y_km,z_km,vx_km_s,vy_km_s,vz_km_s,ascending\n";
    for (const auto& s : states) {
        out << s.id.plane << ',' << s.id.slot << ',' << csv::fixed(s.position_km.x, 6) << ','
            << csv::fixed(s.position_km.y, 6) << ',' << csv::fixed(s.position_km.z, 6) << ','
            << csv::fixed(s.velocity_km_s.x, 6) << ',' << csv::fixed(s.velocity_km_s.y, 6) << ','
            << csv::fixed(s.velocity_km_s.z, 6) << ',' << (s.ascending ? 1 : 0) << '\n';
    }
}

}  // namespace owsn
