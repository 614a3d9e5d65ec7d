#include "owsn/isl_topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "owsn/csv.hpp"

namespace owsn {

std::string to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::intra_plane: return "intra_plane";
        case EdgeKind::inter_plane: return "inter_plane";
        case EdgeKind::crossing: return "crossing";
    }
    throw std::logic_error("unknown edge kind");
}

std::vector<int> IslGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(node_count()), 0);
    for (const auto& e : edges) {
        ++deg[static_cast<std::size_t>(node_index(spec, e.a))];
        ++deg[static_cast<std::size_t>(node_index(spec, e.b))];
    }
    return deg;
}

bool IslGraph::connected() const {
    const int n = node_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        int ia = node_index(spec, e.a), ib = node_index(spec, e.b);
        adj[static_cast<std::size_t>(ia)].push_back(ib);
        adj[static_cast<std::size_t>(ib)].push_back(ia);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == n;
}

namespace {

struct EdgeFailure {
    IslEdge edge;
    std::string reason;
};

void check_states(const ConstellationSpec& spec, const std::vector<SatelliteState>& states) {
    if (states.size() != static_cast<std::size_t>(spec.total_satellites()))
        throw std::invalid_argument("build_topology: states do not form the full constellation");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (node_index(spec, states[i].id) != static_cast<int>(i))
            throw std::invalid_argument("build_topology: states out of plane-major order");
    }
}

// Relative pointing geometry of two same-altitude circular orbits:
// cos(separation angle)(t) = offset + amplitude * cos(2*omega*t - phase).
struct SeparationModel {
    double offset = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double omega = 0.0;  // orbital rate, rad/s
};

SeparationModel separation_model(const SatelliteState& a, const SatelliteState& b) {
    const double r = norm(a.position_km);
    const Vec3 ca = a.position_km / r;
    const Vec3 sa = normalized(a.velocity_km_s);
    const Vec3 cb = b.position_km / norm(b.position_km);
    const Vec3 sb = normalized(b.velocity_km_s);

    const double cc = dot(ca, cb), ss = dot(sa, sb);
    const double cs = dot(ca, sb) + dot(sa, cb);

    SeparationModel m;
    m.offset = 0.5 * (cc + ss);
    const double beta = 0.5 * (cc - ss);
    const double gamma = 0.5 * cs;
    m.amplitude = std::hypot(beta, gamma);
    m.phase = std::atan2(gamma, beta);
    m.omega = norm(a.velocity_km_s) / r;
    return m;
}

// Seconds until the pair's separation first exceeds d_max_km, assuming it
// is within range now. Infinity when the range never breaks.
double remaining_contact_s(const SatelliteState& a, const SatelliteState& b, double d_max_km) {
    const double r = norm(a.position_km);
    const double cos_min = 1.0 - (d_max_km * d_max_km) / (2.0 * r * r);
    const SeparationModel m = separation_model(a, b);

    if (m.amplitude < 1e-12 || m.offset - m.amplitude >= cos_min)
        return std::numeric_limits<double>::infinity();

    double q = (cos_min - m.offset) / m.amplitude;
    q = std::clamp(q, -1.0, 1.0);
    // Separation grows through d_max where cos(theta) crosses q downward,
    // i.e. at theta = acos(q) mod 2*pi with theta(t) = 2*omega*t - phase.
    const double theta0 = -m.phase;
    double dtheta = std::fmod(std::acos(q) - theta0, 2.0 * kPi);
    if (dtheta < 0.0) dtheta += 2.0 * kPi;
    return dtheta / (2.0 * m.omega);
}

void append_crossing_links(IslGraph& graph, const ConstellationSpec& spec,
                           const std::vector<SatelliteState>& states, const EarthModel& earth,
                           double d_max_km) {
    const int P = spec.num_planes;
    const int n = spec.total_satellites();
    std::vector<char> matched(static_cast<std::size_t>(n), 0);

    auto plane_gap = [P](int pa, int pb) {
        int d = std::abs(pa - pb) % P;
        return std::min(d, P - d);
    };

    for (int i = 0; i < n; ++i) {
        if (matched[static_cast<std::size_t>(i)]) continue;
        const SatelliteState& sat = states[static_cast<std::size_t>(i)];

        int best = -1;
        double best_time = -1.0;
        for (int j = 0; j < n; ++j) {
            if (j == i || matched[static_cast<std::size_t>(j)]) continue;
            const SatelliteState& cand = states[static_cast<std::size_t>(j)];
            if (plane_gap(sat.id.plane, cand.id.plane) < 2) continue;
            if (cand.ascending == sat.ascending) continue;
            const double d = distance(sat.position_km, cand.position_km);
            if (d > d_max_km) continue;
            if (!line_of_sight(sat.position_km, cand.position_km, earth)) continue;
            const double t = remaining_contact_s(sat, cand, d_max_km);
            if (t > best_time) {
                best_time = t;
                best = j;
            }
        }
        if (best < 0) continue;

        matched[static_cast<std::size_t>(i)] = 1;
        matched[static_cast<std::size_t>(best)] = 1;
        const SatelliteState& partner = states[static_cast<std::size_t>(best)];
        graph.edges.push_back({sat.id, partner.id, EdgeKind::crossing,
                               distance(sat.position_km, partner.position_km)});
    }
}

}  // namespace

IslGraph build_topology(const ConstellationSpec& spec, const std::vector<SatelliteState>& states,
                        TopologyStrategy strategy, const EarthModel& earth,
                        const std::optional<TerminalSpec>& terminal, InterPlaneRule rule) {
    spec.validate();
    earth.validate();
    check_states(spec, states);

    const int P = spec.num_planes, S = spec.sats_per_plane;
    const double range_km = max_isl_range(spec.altitude_km, earth);
    const double d_max_km =
        terminal ? std::min(range_km, terminal->max_link_km) : range_km;

    IslGraph graph;
    graph.spec = spec;
    graph.time_s = 0.0;

    auto state_at = [&](int p, int s) -> const SatelliteState& {
        return states[static_cast<std::size_t>(p * S + s)];
    };

    std::vector<EdgeFailure> failures;
    auto add_mandatory = [&](SatelliteId a, SatelliteId b, EdgeKind kind) {
        const SatelliteState& sa = state_at(a.plane, a.slot);
        const SatelliteState& sb = state_at(b.plane, b.slot);
        IslEdge edge{a, b, kind, distance(sa.position_km, sb.position_km)};
        if (!line_of_sight(sa.position_km, sb.position_km, earth)) {
            failures.push_back({edge, "no line of sight"});
        } else if (edge.distance_km > d_max_km) {
            failures.push_back({edge, terminal ? "exceeds terminal link distance"
                                               : "exceeds max ISL range"});
        } else {
            graph.edges.push_back(edge);
        }
    };

    // Ring edges: front and back neighbors within each plane.
    for (int p = 0; p < P; ++p) {
        if (S < 2) break;
        const int ring_edges = (S == 2) ? 1 : S;
        for (int s = 0; s < ring_edges; ++s)
            add_mandatory({p, s}, {p, (s + 1) % S}, EdgeKind::intra_plane);
    }

    // One partner in each adjacent plane, constant slot offset per plane
    // pair so every satellite ends up with exactly one link per side.
    if (P >= 2) {
        const int pair_count = (P == 2) ? 1 : P;
        for (int p = 0; p < pair_count; ++p) {
            const int q = (p + 1) % P;
            int offset = 0;
            if (rule == InterPlaneRule::nearest) {
                double best = std::numeric_limits<double>::infinity();
                for (int t = 0; t < S; ++t) {
                    const double d =
                        distance(state_at(p, 0).position_km, state_at(q, t).position_km);
                    if (d < best) {
                        best = d;
                        offset = t;
                    }
                }
            }
            for (int s = 0; s < S; ++s)
                add_mandatory({p, s}, {q, (s + offset) % S}, EdgeKind::inter_plane);
        }
    }

    if (!failures.empty()) {
        std::ostringstream msg;
        msg << "infeasible topology: " << failures.size() << " mandatory edge(s) failed:";
        for (const auto& f : failures) {
            msg << " [" << f.edge.a.plane << ":" << f.edge.a.slot << "-" << f.edge.b.plane << ":"
                << f.edge.b.slot << " " << to_string(f.edge.kind) << " "
                << csv::fixed(f.edge.distance_km, 3) << " km: " << f.reason << "]";
        }
        throw infeasible_error(msg.str());
    }

    if (strategy == TopologyStrategy::plus_grid_crossing)
        append_crossing_links(graph, spec, states, earth, d_max_km);

    return graph;
}

MeshReport classify_meshes(const IslGraph& graph, const std::vector<SatelliteState>& states) {
    check_states(graph.spec, states);

    MeshReport report;
    for (const auto& s : states)
        (is_ascending(s) ? report.ascending_count : report.descending_count)++;

    report.edge_class.reserve(graph.edges.size());
    for (const auto& e : graph.edges) {
        const bool asc_a = is_ascending(states[static_cast<std::size_t>(node_index(graph.spec, e.a))]);
        const bool asc_b = is_ascending(states[static_cast<std::size_t>(node_index(graph.spec, e.b))]);
        const MeshClass cls = (asc_a == asc_b) ? MeshClass::intra_mesh : MeshClass::inter_mesh;
        report.edge_class.push_back(cls);
        (cls == MeshClass::intra_mesh ? report.intra_mesh_edges : report.inter_mesh_edges)++;
    }
    report.total_edges = graph.edges.size();
    return report;
}

double doppler_shift(const SatelliteState& a, const SatelliteState& b, double carrier_hz) {
    if (!(carrier_hz > 0.0)) throw std::invalid_argument("doppler_shift: carrier_hz must be > 0");
    const Vec3 dp = a.position_km - b.position_km;
    const double sep = norm(dp);
    if (sep == 0.0) throw std::domain_error("doppler_shift: coincident positions");
    const double range_rate = dot(dp, a.velocity_km_s - b.velocity_km_s) / sep;
    return -carrier_hz * range_rate / kVacuumLightSpeedKmS;
}

double point_ahead_angle(const SatelliteState& a, const SatelliteState& b) {
    const Vec3 dp = b.position_km - a.position_km;
    const double sep = norm(dp);
    if (sep == 0.0) throw std::domain_error("point_ahead_angle: coincident positions");
    const Vec3 los = dp / sep;
    const Vec3 v_rel = b.velocity_km_s - a.velocity_km_s;
    const Vec3 v_perp = v_rel - los * dot(los, v_rel);
    return 2.0 * norm(v_perp) / kVacuumLightSpeedKmS;
}

std::vector<ContactWindow> contact_windows(SatelliteId a, SatelliteId b,
                                           const ConstellationSpec& spec, const EarthModel& earth,
                                           double horizon_s, double step_s,
                                           const std::optional<TerminalSpec>& terminal,
                                           double setup_time_s, double carrier_hz) {
    spec.validate();
    earth.validate();
    if (!(horizon_s > 0.0)) throw std::invalid_argument("contact_windows: horizon_s must be > 0");
    if (!(step_s > 0.0 && step_s <= horizon_s))
        throw std::invalid_argument("contact_windows: step_s must be in (0, horizon_s]");
    if (!(setup_time_s >= 0.0))
        throw std::invalid_argument("contact_windows: setup_time_s must be >= 0");
    if (a == b) throw std::invalid_argument("contact_windows: identical satellites");

    const auto states0 = generate(spec, earth, 0.0);
    const SatelliteState sa0 = states0[static_cast<std::size_t>(node_index(spec, a))];
    const SatelliteState sb0 = states0[static_cast<std::size_t>(node_index(spec, b))];

    const double range_km = max_isl_range(spec.altitude_km, earth);
    const double d_max_km = terminal ? std::min(range_km, terminal->max_link_km) : range_km;

    auto in_contact = [&](double t) {
        const SatelliteState sa = propagate(sa0, t);
        const SatelliteState sb = propagate(sb0, t);
        return distance(sa.position_km, sb.position_km) <= d_max_km &&
               line_of_sight(sa.position_km, sb.position_km, earth);
    };

    // Bisect a contact transition inside (lo, hi) down to 0.1 s. Returns a
    // time at which the link is up.
    auto refine = [&](double lo, double hi, bool entering) {
        while (hi - lo > 0.1) {
            const double mid = 0.5 * (lo + hi);
            if (in_contact(mid) == entering)
                hi = mid;
            else
                lo = mid;
        }
        return entering ? hi : lo;
    };

    std::vector<ContactWindow> windows;
    ContactWindow current;
    bool open = false;
    double prev_t = 0.0;

    auto observe = [&](double t) {
        const SatelliteState sa = propagate(sa0, t);
        const SatelliteState sb = propagate(sb0, t);
        current.min_distance_km =
            std::min(current.min_distance_km, distance(sa.position_km, sb.position_km));
        current.max_abs_doppler_hz =
            std::max(current.max_abs_doppler_hz, std::abs(doppler_shift(sa, sb, carrier_hz)));
    };

    const long long steps = static_cast<long long>(std::ceil(horizon_s / step_s));
    for (long long k = 0; k < steps; ++k) {
        const double t = k * step_s;
        const bool in = in_contact(t);
        if (in && !open) {
            current = ContactWindow{};
            current.start_s = (k == 0) ? 0.0 : refine(prev_t, t, true);
            current.min_distance_km = std::numeric_limits<double>::infinity();
            open = true;
            observe(current.start_s);
        }
        if (open && in) observe(t);
        if (!in && open) {
            current.end_s = refine(prev_t, t, false);
            observe(current.end_s);
            windows.push_back(current);
            open = false;
        }
        prev_t = t;
    }
    if (open) {
        current.end_s = horizon_s;
        windows.push_back(current);
    }

    std::vector<ContactWindow> usable;
    for (auto w : windows) {
        if (w.end_s - w.start_s <= setup_time_s) continue;
        w.start_s += setup_time_s;
        usable.push_back(w);
    }
    return usable;
}

const std::vector<TerminalSpec>& terminal_catalog() {
    static const std::vector<TerminalSpec> catalog = {
        {"Mynaric", "CONDOR", 10.0, 8000.0, "Ethernet IEEE 802.3", true},
        {"Tesat", "LCT 135", 1.8, 80000.0, std::nullopt, std::nullopt},
        {"Tesat", "SmartLCT", 1.8, 45000.0, std::nullopt, std::nullopt},
        {"General Atomics", "1550 nm LCT", 5.0, 2500.0, std::nullopt, std::nullopt},
    };
    return catalog;
}

std::vector<TerminalSpec> feasible_terminals(double distance_km, double required_gbps) {
    if (!(distance_km > 0.0))
        throw std::invalid_argument("feasible_terminals: distance_km must be > 0");
    if (!(required_gbps > 0.0))
        throw std::invalid_argument("feasible_terminals: required_gbps must be > 0");

    std::vector<TerminalSpec> out;
    for (const auto& t : terminal_catalog())
        if (t.max_link_km >= distance_km && t.capacity_gbps >= required_gbps) out.push_back(t);
    std::stable_sort(out.begin(), out.end(), [](const TerminalSpec& x, const TerminalSpec& y) {
        if (x.capacity_gbps != y.capacity_gbps) return x.capacity_gbps > y.capacity_gbps;
        return x.max_link_km > y.max_link_km;
    });
    return out;
}

std::optional<TerminalSpec> find_terminal(const std::string& name) {
    for (const auto& t : terminal_catalog())
        if (t.name == name) return t;
    return std::nullopt;
}

void write_edges_csv(std::ostream& out, const IslGraph& graph) {
    std::vector<IslEdge> sorted = graph.edges;
    for (auto& e : sorted)
        if (e.b < e.a) std::swap(e.a, e.b);
    std::sort(sorted.begin(), sorted.end(), [](const IslEdge& x, const IslEdge& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    out << "plane_a,slot_a,plane_b,slot_b,kind,distance_km\n";
    for (const auto& e : sorted)
        out << e.a.plane << ',' << e.a.slot << ',' << e.b.plane << ',' << e.b.slot << ','
            << to_string(e.kind) << ',' << csv::fixed(e.distance_km, 6) << '\n';
}

namespace {
constexpr const char* kTerminalsHeader = "vendor,name,capacity_gbps,max_link_km,standard,atp";
}

void write_terminals_csv(std::ostream& out, const std::vector<TerminalSpec>& terminals) {
    out << kTerminalsHeader << '\n';
    for (const auto& t : terminals) {
        out << t.vendor << ',' << t.name << ',' << csv::compact(t.capacity_gbps) << ','
            << csv::compact(t.max_link_km) << ',' << (t.standard ? *t.standard : "-") << ','
            << (t.atp_available ? (*t.atp_available ? "available" : "unavailable") : "-") << '\n';
    }
}

std::vector<TerminalSpec> read_terminals_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kTerminalsHeader)
        throw std::invalid_argument("terminal CSV: bad or missing header");

    std::vector<TerminalSpec> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split_line(line);
        if (f.size() != 6) throw std::invalid_argument("terminal CSV: expected 6 fields");
        TerminalSpec t;
        t.vendor = f[0];
        t.name = f[1];
        t.capacity_gbps = std::stod(f[2]);
        t.max_link_km = std::stod(f[3]);
        if (!(t.capacity_gbps > 0.0) || !(t.max_link_km > 0.0))
            throw std::invalid_argument("terminal CSV: capacity and link distance must be > 0");
        if (f[4] != "-") t.standard = f[4];
        if (f[5] == "available")
            t.atp_available = true;
        else if (f[5] == "unavailable")
            t.atp_available = false;
        else if (f[5] != "-")
            throw std::invalid_argument("terminal CSV: bad atp field '" + f[5] + "'");
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace owsn
