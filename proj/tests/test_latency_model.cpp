#include <doctest.h>

#include <cmath>
#include <sstream>

#include "owsn/csv.hpp"
#include "owsn/latency_model.hpp"

using namespace owsn;

namespace {

// Published comparison rows: hops, theta, satellite hop/end-to-end/latency,
// terrestrial distance/latency.
struct PublishedRow {
    int hops;
    double theta;
    long long sat_hop, sat_e2e;
    double sat_ms;
    long long terr_km;
    double terr_ms;
};

constexpr PublishedRow kPublished[10] = {
    {1, 5.45, 659, 1759, 5.87, 607, 2.97},    {2, 10.90, 1317, 2417, 8.06, 1213, 5.94},
    {3, 16.35, 1976, 3076, 10.26, 1820, 8.91}, {4, 21.80, 2635, 3735, 12.46, 2427, 11.88},
    {5, 27.25, 3294, 4394, 14.66, 3033, 14.85}, {6, 32.70, 3952, 5052, 16.85, 3640, 17.82},
    {7, 38.15, 4611, 5711, 19.05, 4247, 20.79}, {8, 43.60, 5270, 6370, 21.25, 4853, 23.76},
    {9, 49.05, 5929, 7029, 23.45, 5460, 26.73}, {10, 54.50, 6587, 7687, 25.64, 6067, 29.70},
};

// Independent oracle: each cell recomputed directly from the two closed
// forms, bypassing the geometry module.
struct OracleRow {
    double sat_hop, sat_e2e, sat_ms, terr_km, terr_ms;
};

OracleRow oracle_row(int n) {
    const double pi = 3.14159265358979323846;
    const double c = 299792.458;
    const double hop = 2.0 * 6928.0 * std::sin((5.45 / 2.0) * pi / 180.0);
    const double arc = 2.0 * pi * 6378.0 * (5.45 / 360.0);
    OracleRow row;
    row.sat_hop = n * hop;
    row.sat_e2e = row.sat_hop + 1100.0;
    row.sat_ms = row.sat_e2e / c * 1000.0;
    row.terr_km = n * arc;
    row.terr_ms = row.terr_km / (c / 1.4675) * 1000.0;
    return row;
}

}  // namespace

TEST_CASE("fiber speed follows c over the refractive index") {
    CHECK(fiber_speed_km_s(1.4675) == doctest::Approx(204287.875979557).epsilon(1e-12));
    CHECK(csv::fixed(fiber_speed_km_s(1.4675), 3) == "204287.876");
    CHECK(fiber_speed_km_s(1.0) == 299792.458);
    CHECK(fiber_speed_km_s(1.5) == doctest::Approx(199861.638666667).epsilon(1e-12));
    CHECK_THROWS_AS(fiber_speed_km_s(0.99), std::domain_error);
}

TEST_CASE("satellite rows sum per-hop chords and add the ingress/egress distance") {
    const UseCaseScenario scenario;
    for (int n : {1, 5, 10}) {
        const auto leg = satellite_row(n, scenario);
        const auto expect = oracle_row(n);
        CHECK(leg.hop_distance_km == doctest::Approx(expect.sat_hop).epsilon(1e-12));
        CHECK(leg.end_to_end_km == doctest::Approx(expect.sat_e2e).epsilon(1e-12));
        CHECK(leg.latency_ms == doctest::Approx(expect.sat_ms).epsilon(1e-12));
    }
    CHECK(csv::round_half_away(satellite_row(1, scenario).hop_distance_km) == 659);
    CHECK(csv::round_half_away(satellite_row(5, scenario).hop_distance_km) == 3294);
    CHECK(csv::fixed(satellite_row(5, scenario).latency_ms, 2) == "14.66");
    CHECK_THROWS_AS(satellite_row(0, scenario), std::invalid_argument);
}

TEST_CASE("terrestrial rows stretch the arc with the hop count") {
    const UseCaseScenario scenario;
    for (int n : {1, 5, 10}) {
        const auto leg = terrestrial_row(n, scenario);
        const auto expect = oracle_row(n);
        CHECK(leg.distance_km == doctest::Approx(expect.terr_km).epsilon(1e-12));
        CHECK(leg.latency_ms == doctest::Approx(expect.terr_ms).epsilon(1e-12));
    }
    CHECK(csv::round_half_away(terrestrial_row(1, scenario).distance_km) == 607);
    CHECK(csv::fixed(terrestrial_row(10, scenario).latency_ms, 2) == "29.70");
    CHECK_THROWS_AS(terrestrial_row(0, scenario), std::invalid_argument);
}

TEST_CASE("the ten-row comparison reproduces every published cell") {
    const auto rows = comparison_table(10, UseCaseScenario{});
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& pub = kPublished[i];
        CHECK(row.hops == pub.hops);
        CHECK(row.theta_deg == doctest::Approx(pub.theta).epsilon(1e-12));
        CHECK(csv::round_half_away(row.sat_hop_distance_km) == pub.sat_hop);
        CHECK(csv::round_half_away(row.sat_end_to_end_km) == pub.sat_e2e);
        CHECK(csv::fixed(row.sat_latency_ms, 2) == csv::fixed(pub.sat_ms, 2));
        CHECK(csv::round_half_away(row.terr_distance_km) == pub.terr_km);
        CHECK(csv::fixed(row.terr_latency_ms, 2) == csv::fixed(pub.terr_ms, 2));

        const auto expect = oracle_row(row.hops);
        CHECK(row.sat_end_to_end_km == doctest::Approx(expect.sat_e2e).epsilon(1e-12));
        CHECK(row.terr_distance_km == doctest::Approx(expect.terr_km).epsilon(1e-12));
    }
}

TEST_CASE("latency is purely distance over speed and monotone in hops") {
    const UseCaseScenario scenario;
    const auto rows = comparison_table(12, scenario);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].sat_latency_ms > rows[i - 1].sat_latency_ms);
        CHECK(rows[i].terr_latency_ms > rows[i - 1].terr_latency_ms);
    }
    for (const auto& row : rows) {
        CHECK(row.sat_latency_ms / 1000.0 * scenario.vacuum_speed_km_s ==
              doctest::Approx(row.sat_end_to_end_km).epsilon(1e-12));
        CHECK(row.terr_latency_ms / 1000.0 * scenario.fiber.speed_km_s ==
              doctest::Approx(row.terr_distance_km).epsilon(1e-12));
    }
}

TEST_CASE("the satellite-minus-terrestrial gap is affine in the hop count") {
    const auto rows = comparison_table(3, UseCaseScenario{});
    const double g1 = rows[0].sat_latency_ms - rows[0].terr_latency_ms;
    const double g2 = rows[1].sat_latency_ms - rows[1].terr_latency_ms;
    const double g3 = rows[2].sat_latency_ms - rows[2].terr_latency_ms;
    CHECK(std::abs((g3 - g2) - (g2 - g1)) < 1e-11);
}

TEST_CASE("crossover lands on five hops just past 3,000 terrestrial km") {
    const auto result = crossover(UseCaseScenario{});
    CHECK(result.first_winning_hops == 5);
    CHECK(result.terrestrial_distance_km == doctest::Approx(3033.39096661240).epsilon(1e-12));
    CHECK(csv::round_half_away(result.terrestrial_distance_km) == 3033);

    // Rows 4 and 5 bracket the flip.
    const auto rows = comparison_table(5, UseCaseScenario{});
    CHECK(rows[3].sat_latency_ms > rows[3].terr_latency_ms);
    CHECK(rows[4].sat_latency_ms < rows[4].terr_latency_ms);
}

TEST_CASE("free ingress/egress makes the satellite path win immediately") {
    UseCaseScenario scenario;
    scenario.ingress_egress_km = 0.0;
    CHECK(crossover(scenario).first_winning_hops == 1);
    CHECK(satellite_row(1, scenario).latency_ms ==
          doctest::Approx(2.19734022668525).epsilon(1e-12));
    CHECK(csv::fixed(satellite_row(1, scenario).latency_ms, 2) == "2.20");
}

TEST_CASE("vacuum-speed fiber never crosses over") {
    UseCaseScenario scenario;
    scenario.fiber = MediumModel::from_index("vacuum", 1.0);
    CHECK_THROWS_AS(crossover(scenario), infeasible_error);
}

TEST_CASE("latency CSV uses the pinned rounding rules") {
    std::ostringstream out;
    write_latency_csv(out, comparison_table(2, UseCaseScenario{}));
    CHECK(out.str() ==
          "hops,theta_deg,sat_hop_km,sat_e2e_km,sat_ms,terr_km,terr_ms\n"
          "1,5.45,659,1759,5.87,607,2.97\n"
          "2,10.90,1317,2417,8.06,1213,5.94\n");
}
