#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "owsn/constellation.hpp"

using namespace owsn;

namespace {
const EarthModel kEarth = EarthModel::latency_preset();
const ConstellationSpec kPhase1 = presets().at("starlink-phase1-modified");

double orbital_period_s(const ConstellationSpec& spec, const EarthModel& earth) {
    const double r = earth.radius_km + spec.altitude_km;
    return 2.0 * kPi * std::sqrt(r * r * r / earth.gravitational_parameter_km3_s2);
}
}  // namespace

TEST_CASE("plane and slot spacing follow the four-parameter definition") {
    CHECK(plane_spacing_deg(kPhase1) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(slot_spacing_deg(kPhase1) == doctest::Approx(360.0 / 66.0).epsilon(1e-15));

    const auto& grid40 = presets().at("example-40x40");
    CHECK(plane_spacing_deg(grid40) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(slot_spacing_deg(grid40) == doctest::Approx(9.0).epsilon(1e-15));

    ConstellationSpec single{45.0, 500.0, 1, 1, 0, 360.0};
    CHECK(plane_spacing_deg(single) == doctest::Approx(360.0));
    CHECK(slot_spacing_deg(single) == doctest::Approx(360.0));
}

TEST_CASE("spec validation rejects out-of-range parameters") {
    CHECK_THROWS_AS((ConstellationSpec{0.0, 550.0, 24, 66, 0, 360.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConstellationSpec{53.0, -1.0, 24, 66, 0, 360.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConstellationSpec{53.0, 550.0, 0, 66, 0, 360.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConstellationSpec{53.0, 550.0, 24, 0, 0, 360.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConstellationSpec{53.0, 550.0, 24, 66, 24, 360.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConstellationSpec{53.0, 550.0, 24, 66, -1, 360.0}).validate(),
                    std::invalid_argument);
}

TEST_CASE("generate produces the advertised satellite counts with distinct ids") {
    const auto states = generate(kPhase1, kEarth, 0.0);
    CHECK(states.size() == 1584);

    const auto original = generate(presets().at("starlink-phase1-original"), kEarth, 0.0);
    CHECK(original.size() == 1600);

    std::set<std::pair<int, int>> ids;
    for (const auto& s : states) ids.insert({s.id.plane, s.id.slot});
    CHECK(ids.size() == states.size());
}

TEST_CASE("generated states sit on circular orbits at the right speed") {
    const double r = kEarth.radius_km + kPhase1.altitude_km;
    const double expected_speed = std::sqrt(kEarth.gravitational_parameter_km3_s2 / r);
    CHECK(expected_speed == doctest::Approx(7.58516353169399).epsilon(1e-12));

    for (double t : {0.0, 987.5}) {
        for (const auto& s : generate(kPhase1, kEarth, t)) {
            CHECK(std::abs(norm(s.position_km) - r) / r < 1e-6);
            const double radial =
                std::abs(dot(s.position_km, s.velocity_km_s)) /
                (norm(s.position_km) * norm(s.velocity_km_s));
            CHECK(radial < 1e-9);
            CHECK(norm(s.velocity_km_s) == doctest::Approx(expected_speed).epsilon(1e-12));
        }
    }
}

TEST_CASE("consecutive same-plane satellites sit one chord apart at any time") {
    const double r = kEarth.radius_km + kPhase1.altitude_km;
    const double expected = chord_distance(slot_spacing_deg(kPhase1), r);
    for (double t : {0.0, 3000.0}) {
        const auto states = generate(kPhase1, kEarth, t);
        const int S = kPhase1.sats_per_plane;
        for (int p = 0; p < kPhase1.num_planes; ++p) {
            for (int s = 0; s < S; ++s) {
                const auto& a = states[static_cast<std::size_t>(p * S + s)];
                const auto& b = states[static_cast<std::size_t>(p * S + (s + 1) % S)];
                CHECK(std::abs(distance(a.position_km, b.position_km) - expected) < 1e-6);
            }
        }
    }
}

TEST_CASE("generate at t equals elementwise propagation from epoch") {
    const ConstellationSpec spec{53.0, 550.0, 6, 11, 2, 360.0};
    const double t = 741.25;
    const auto direct = generate(spec, kEarth, t);
    const auto epoch = generate(spec, kEarth, 0.0);
    REQUIRE(direct.size() == epoch.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        const auto moved = propagate(epoch[i], t);
        CHECK(distance(moved.position_km, direct[i].position_km) < 1e-6);
        CHECK(distance(moved.velocity_km_s, direct[i].velocity_km_s) < 1e-9);
        CHECK(moved.ascending == direct[i].ascending);
    }
}

TEST_CASE("propagate is the identity at dt = 0 and closes after one period") {
    const auto states = generate(kPhase1, kEarth, 0.0);
    const auto& s = states[123];

    const auto same = propagate(s, 0.0);
    CHECK(distance(same.position_km, s.position_km) == 0.0);

    const double period = orbital_period_s(kPhase1, kEarth);
    CHECK(period == doctest::Approx(5738.82258783927).epsilon(1e-12));
    const auto back = propagate(s, period);
    CHECK(distance(back.position_km, s.position_km) < 1e-6);

    const auto opposite = propagate(s, period / 2.0);
    CHECK(distance(opposite.position_km, s.position_km * -1.0) < 1e-6);
}

TEST_CASE("ascending flag tracks the latitude rate") {
    // Slot 0 of plane 0 starts at its ascending node.
    const auto states = generate(kPhase1, kEarth, 0.0);
    CHECK(is_ascending(states[0]));

    const double period = orbital_period_s(kPhase1, kEarth);
    const auto at_descending_node = propagate(states[0], period / 2.0);
    CHECK_FALSE(is_ascending(at_descending_node));

    // Over a full period the flag is up exactly half the time.
    const int samples = 10000;
    int up = 0;
    for (int i = 0; i < samples; ++i) {
        if (is_ascending(propagate(states[0], period * i / samples))) ++up;
    }
    CHECK(std::abs(up - samples / 2) <= 1);
}

TEST_CASE("presets carry the published parameter sets") {
    const auto& table = presets();
    CHECK(table.at("starlink-phase1-modified").num_planes == 24);
    CHECK(table.at("starlink-phase1-modified").sats_per_plane == 66);
    CHECK(table.at("starlink-phase1-modified").altitude_km == 550.0);
    CHECK(table.at("starlink-phase1-original").total_satellites() == 1600);
    CHECK(table.at("starlink-phase1-original").altitude_km == 1150.0);
    CHECK(table.at("phase2-c").sats_per_plane == 75);
    CHECK(table.at("phase2-c").inclination_deg == 81.0);

    const int phase2_total = table.at("phase2-a").total_satellites() +
                             table.at("phase2-b").total_satellites() +
                             table.at("phase2-c").total_satellites() +
                             table.at("phase2-d").total_satellites();
    CHECK(phase2_total == 2825);
}

TEST_CASE("snapshot CSV is deterministic and carries the epoch geometry") {
    const ConstellationSpec spec{53.0, 550.0, 2, 3, 0, 360.0};
    const auto states = generate(spec, kEarth, 0.0);

    std::ostringstream a, b;
    write_snapshot_csv(a, states);
    write_snapshot_csv(b, states);
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "plane,slot,x_km,y_km,z_km,vx_km_s,vy_km_s,vz_km_s,ascending");
    std::getline(in, line);
    CHECK(line.substr(0, 19) == "0,0,6928.000000,0.0");
    CHECK(line.back() == '1');

    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("node indexing round-trips and rejects out-of-range ids") {
    CHECK(node_index(kPhase1, {0, 0}) == 0);
    CHECK(node_index(kPhase1, {1, 0}) == 66);
    CHECK(id_from_index(kPhase1, 66 * 23 + 65) == SatelliteId{23, 65});
    CHECK_THROWS_AS(node_index(kPhase1, {24, 0}), std::invalid_argument);
    CHECK_THROWS_AS(node_index(kPhase1, {0, 66}), std::invalid_argument);
    CHECK_THROWS_AS(id_from_index(kPhase1, 1584), std::invalid_argument);
}
