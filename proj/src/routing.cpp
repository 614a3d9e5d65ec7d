#include "owsn/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "owsn/csv.hpp"

namespace owsn {

void GroundPoint::normalize() {
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
        throw std::invalid_argument("GroundPoint: |latitude| must be <= 90");
    if (!std::isfinite(longitude_deg))
        throw std::invalid_argument("GroundPoint: longitude must be finite");
    longitude_deg = std::fmod(longitude_deg, 360.0);
    if (longitude_deg <= -180.0) longitude_deg += 360.0;
    if (longitude_deg > 180.0) longitude_deg -= 360.0;
}

Vec3 surface_position(const GroundPoint& g, const EarthModel& earth) {
    const double lat = deg2rad(g.latitude_deg);
    const double lon = deg2rad(g.longitude_deg);
    return Vec3{std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)} *
           earth.radius_km;
}

SatelliteId attach_ground(const GroundPoint& g, const ConstellationSpec& spec,
                          const std::vector<SatelliteState>& states, const EarthModel& earth,
                          std::optional<double> min_elevation_deg) {
    spec.validate();
    earth.validate();
    if (states.empty()) throw std::invalid_argument("attach_ground: empty constellation");

    GroundPoint point = g;
    point.normalize();

    const double band_deg =
        spec.inclination_deg <= 90.0 ? spec.inclination_deg : 180.0 - spec.inclination_deg;
    if (std::abs(point.latitude_deg) > band_deg)
        throw infeasible_error("ground point latitude " + csv::fixed(point.latitude_deg, 2) +
                               " outside coverage band +/-" + csv::fixed(band_deg, 2));

    const Vec3 gp = surface_position(point, earth);

    SatelliteId best{};
    double best_slant = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const auto& s : states) {
        if (min_elevation_deg) {
            const Vec3 to_sat = s.position_km - gp;
            const double sin_el = dot(to_sat, gp) / (norm(to_sat) * norm(gp));
            if (sin_el < std::sin(deg2rad(*min_elevation_deg))) continue;
        }
        const double slant = distance(s.position_km, gp);
        if (slant < best_slant || (slant == best_slant && s.id < best)) {
            best_slant = slant;
            best = s.id;
            found = true;
        }
    }
    if (!found)
        throw infeasible_error("no satellite above the minimum elevation mask");
    return best;
}

namespace {

std::vector<SatelliteId> path_to(const ConstellationSpec& spec, const std::vector<int>& parent,
                                 int node) {
    std::vector<SatelliteId> path;
    for (int u = node; u != -1; u = parent[static_cast<std::size_t>(u)])
        path.push_back(id_from_index(spec, u));
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<RoutePath> shortest_path(const IslGraph& graph, SatelliteId src, SatelliteId dst) {
    const ConstellationSpec& spec = graph.spec;
    const int n = graph.node_count();
    const int s = node_index(spec, src);
    const int t = node_index(spec, dst);

    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    for (const auto& e : graph.edges) {
        const int ia = node_index(spec, e.a), ib = node_index(spec, e.b);
        adj[static_cast<std::size_t>(ia)].emplace_back(ib, e.distance_km);
        adj[static_cast<std::size_t>(ib)].emplace_back(ia, e.distance_km);
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[static_cast<std::size_t>(s)] = 0.0;
    queue.emplace(0.0, s);

    // Among equal-distance routes, prefer the lexicographically smaller
    // node sequence; ties are rare, so comparing materialized paths is
    // fine.
    auto lex_less = [&](int via, int node) {
        auto cand = path_to(spec, parent, via);
        cand.push_back(id_from_index(spec, node));
        return cand < path_to(spec, parent, node);
    };

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
            const double nd = d + w;
            double& dv = dist[static_cast<std::size_t>(v)];
            if (nd < dv || (nd == dv && !done[static_cast<std::size_t>(v)] && lex_less(u, v))) {
                dv = nd;
                parent[static_cast<std::size_t>(v)] = u;
                queue.emplace(nd, v);
            }
        }
    }

    if (dist[static_cast<std::size_t>(t)] == kInf) return std::nullopt;

    RoutePath path;
    path.ingress = src;
    path.egress = dst;
    path.hops = path_to(spec, parent, t);
    path.cumulative_km.reserve(path.hops.size());
    for (const auto& id : path.hops)
        path.cumulative_km.push_back(dist[static_cast<std::size_t>(node_index(spec, id))]);
    path.total_distance_km = dist[static_cast<std::size_t>(t)];
    path.latency_ms = path.total_distance_km / kVacuumLightSpeedKmS * 1000.0;
    return path;
}

EndToEndResult end_to_end(const GroundPoint& a, const GroundPoint& b, const IslGraph& graph,
                          const std::vector<SatelliteState>& states, const EarthModel& earth,
                          const UseCaseScenario& scenario,
                          std::optional<double> min_elevation_deg) {
    scenario.validate();

    const SatelliteId ingress = attach_ground(a, graph.spec, states, earth, min_elevation_deg);
    const SatelliteId egress = attach_ground(b, graph.spec, states, earth, min_elevation_deg);

    auto path = shortest_path(graph, ingress, egress);
    if (!path)
        throw infeasible_error("no ISL route between the attachment satellites");

    GroundPoint ga = a, gb = b;
    ga.normalize();
    gb.normalize();
    const Vec3 pa = surface_position(ga, earth);
    const Vec3 pb = surface_position(gb, earth);

    EndToEndResult result;
    result.path = *path;
    result.ingress_slant_km =
        distance(pa, states[static_cast<std::size_t>(node_index(graph.spec, ingress))].position_km);
    result.egress_slant_km =
        distance(pb, states[static_cast<std::size_t>(node_index(graph.spec, egress))].position_km);

    const double sat_total =
        result.ingress_slant_km + path->total_distance_km + result.egress_slant_km;
    result.satellite_latency_ms = sat_total / scenario.vacuum_speed_km_s * 1000.0;

    // Great-circle separation; atan2 form is stable for near and far pairs.
    const double angle = std::atan2(norm(cross(pa, pb)), dot(pa, pb));
    result.terrestrial_latency_ms =
        earth.radius_km * angle / scenario.fiber.speed_km_s * 1000.0;
    return result;
}

void write_route_report(std::ostream& out, const EndToEndResult& result) {
    for (std::size_t i = 0; i < result.path.hops.size(); ++i) {
        const SatelliteId id = result.path.hops[i];
        out << i << ',' << id.plane << ',' << id.slot << ','
            << csv::fixed(result.path.cumulative_km[i], 6) << '\n';
    }
    const double total =
        result.ingress_slant_km + result.path.total_distance_km + result.egress_slant_km;
    out << csv::fixed(total, 6) << ',' << csv::fixed(result.satellite_latency_ms, 3) << ','
        << csv::fixed(result.terrestrial_latency_ms, 3) << '\n';
}

}  // namespace owsn
