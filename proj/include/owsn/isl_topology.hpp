#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "owsn/constellation.hpp"
#include "owsn/errors.hpp"
#include "owsn/geometry.hpp"

// Laser ISL graph construction plus link dynamics: Doppler shift,
// point-ahead angle, contact windows, and the Table-2 terminal catalog.

namespace owsn {

enum class EdgeKind { intra_plane, inter_plane, crossing };

std::string to_string(EdgeKind kind);

struct IslEdge {
    SatelliteId a;
    SatelliteId b;
    EdgeKind kind = EdgeKind::intra_plane;
    double distance_km = 0.0;
};

struct IslGraph {
    ConstellationSpec spec;
    double time_s = 0.0;
    std::vector<IslEdge> edges;

    int node_count() const { return spec.total_satellites(); }
    std::vector<int> degrees() const;
    bool connected() const;
};

// One laser-terminal capability record.
struct TerminalSpec {
    std::string vendor;
    std::string name;
    double capacity_gbps = 0.0;
    double max_link_km = 0.0;
    std::optional<std::string> standard;
    std::optional<bool> atp_available;

    bool operator==(const TerminalSpec&) const = default;
};

struct ContactWindow {
    double start_s = 0.0;  // usable start (geometric start + setup time)
    double end_s = 0.0;
    double min_distance_km = 0.0;
    double max_abs_doppler_hz = 0.0;
};

enum class TopologyStrategy { plus_grid, plus_grid_crossing };

// How the single partner in each adjacent plane is picked. `nearest`
// anchors on slot 0's closest slot in the neighbor plane at build time
// and applies that offset plane-wide, which keeps the mesh 4-regular;
// `same_slot` always pairs equal slot indices.
enum class InterPlaneRule { nearest, same_slot };

// Optical carrier used when a Doppler figure is needed and no carrier is
// given: 193.5 THz, the 1550 nm line.
inline constexpr double kDefaultCarrierHz = 193.5e12;

// Builds the ISL mesh for one constellation snapshot. plus_grid gives
// every satellite its two ring neighbors plus one partner in each
// adjacent plane; plus_grid_crossing additionally attaches at most one
// crossing-plane link per satellite (best effort). Throws
// infeasible_error listing every mandatory edge that fails visibility or
// the terminal's range limit.
IslGraph build_topology(const ConstellationSpec& spec, const std::vector<SatelliteState>& states,
                        TopologyStrategy strategy, const EarthModel& earth,
                        const std::optional<TerminalSpec>& terminal = {},
                        InterPlaneRule rule = InterPlaneRule::nearest);

enum class MeshClass { intra_mesh, inter_mesh };

// Edge partition into the ascending and descending meshes. An edge whose
// endpoints share the ascending flag stays inside one mesh; flag changes
// (turnaround crossings, crossing-plane links) bridge the two.
struct MeshReport {
    int ascending_count = 0;
    int descending_count = 0;
    std::size_t intra_mesh_edges = 0;
    std::size_t inter_mesh_edges = 0;
    std::size_t total_edges = 0;
    std::vector<MeshClass> edge_class;  // aligned with graph.edges
};

MeshReport classify_meshes(const IslGraph& graph, const std::vector<SatelliteState>& states);

// Received-frequency offset -carrier * range_rate / c; positive while
// the pair is closing.
double doppler_shift(const SatelliteState& a, const SatelliteState& b, double carrier_hz);

// Two-way point-ahead angle 2*|v_perp|/c in radians, where v_perp is the
// relative velocity component transverse to the line of sight.
double point_ahead_angle(const SatelliteState& a, const SatelliteState& b);

// Maximal intervals in [0, horizon) where the pair has line of sight and
// is within the terminal's range. Boundaries are bisection-refined to
// 0.1 s; windows shorter than setup_time_s are dropped and the rest
// report start = geometric start + setup_time_s.
std::vector<ContactWindow> contact_windows(SatelliteId a, SatelliteId b,
                                           const ConstellationSpec& spec, const EarthModel& earth,
                                           double horizon_s, double step_s,
                                           const std::optional<TerminalSpec>& terminal = {},
                                           double setup_time_s = 10.0,
                                           double carrier_hz = kDefaultCarrierHz);

// The four cataloged laser terminals.
const std::vector<TerminalSpec>& terminal_catalog();

// Catalog entries able to close a link of the given distance at the
// given rate, ordered by capacity then range, both descending.
std::vector<TerminalSpec> feasible_terminals(double distance_km, double required_gbps);

std::optional<TerminalSpec> find_terminal(const std::string& name);

// Edge list CSV: plane_a,slot_a,plane_b,slot_b,kind,distance_km with
// 6-decimal distances, endpoints normalized so a < b, rows sorted.
void write_edges_csv(std::ostream& out, const IslGraph& graph);

// Terminal CSV: vendor,name,capacity_gbps,max_link_km,standard,atp.
// Missing optionals are written as "-"; values round-trip bit-exactly.
void write_terminals_csv(std::ostream& out, const std::vector<TerminalSpec>& terminals);
std::vector<TerminalSpec> read_terminals_csv(std::istream& in);

}  // namespace owsn
