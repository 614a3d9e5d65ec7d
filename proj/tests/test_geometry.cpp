#include <doctest.h>

#include <cmath>
#include <random>

#include "owsn/geometry.hpp"

using namespace owsn;

namespace {

// Two points at radius r separated by the given straight-line distance,
// symmetric about the x-axis in the xy-plane.
std::pair<Vec3, Vec3> points_at_separation(double radius, double separation) {
    const double alpha = std::asin(separation / (2.0 * radius));
    return {Vec3{radius * std::cos(alpha), radius * std::sin(alpha), 0.0},
            Vec3{radius * std::cos(alpha), -radius * std::sin(alpha), 0.0}};
}

// Independent check: minimum origin distance over a dense sampling of
// the segment.
double sampled_min_origin_distance(const Vec3& a, const Vec3& b) {
    double best = std::numeric_limits<double>::infinity();
    const int n = 20000;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        best = std::min(best, norm(a + t * (b - a)));
    }
    return best;
}

Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        if (norm(v) > 1e-6) return normalized(v);
    }
}

}  // namespace

TEST_CASE("chord_distance matches the published hop values") {
    CHECK(chord_distance(5.45, 6928.0) == doctest::Approx(658.746027620248).epsilon(1e-12));
    CHECK(std::llround(chord_distance(5.45, 6928.0)) == 659);
    CHECK(chord_distance(0.0, 6928.0) == 0.0);
    CHECK(chord_distance(180.0, 6928.0) == doctest::Approx(13856.0).epsilon(1e-12));
    CHECK(chord_distance(360.0, 6928.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("chord_distance rejects bad domains") {
    CHECK_THROWS_AS(chord_distance(-0.1, 6928.0), std::domain_error);
    CHECK_THROWS_AS(chord_distance(360.5, 6928.0), std::domain_error);
    CHECK_THROWS_AS(chord_distance(10.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(chord_distance(10.0, -5.0), std::domain_error);
}

TEST_CASE("arc_distance matches the published values") {
    CHECK(arc_distance(5.45, 6378.0) == doctest::Approx(606.678193322481).epsilon(1e-12));
    CHECK(std::llround(arc_distance(5.45, 6378.0)) == 607);
    CHECK(arc_distance(0.0, 6378.0) == 0.0);
    CHECK(arc_distance(360.0, 6378.0) == doctest::Approx(40074.1558891914).epsilon(1e-12));
    CHECK_THROWS_AS(arc_distance(-1.0, 6378.0), std::domain_error);
    CHECK_THROWS_AS(arc_distance(1.0, 0.0), std::domain_error);
}

TEST_CASE("chord never exceeds arc and grows monotonically to 180 degrees") {
    std::mt19937 rng(7001);
    std::uniform_real_distribution<double> theta_dist(1e-6, 360.0);
    std::uniform_real_distribution<double> radius_dist(1.0, 50000.0);
    for (int i = 0; i < 2000; ++i) {
        const double theta = theta_dist(rng);
        const double radius = radius_dist(rng);
        CHECK(chord_distance(theta, radius) <= arc_distance(theta, radius));
    }
    std::uniform_real_distribution<double> half(0.0, 180.0);
    for (int i = 0; i < 2000; ++i) {
        double a = half(rng), b = half(rng);
        if (a > b) std::swap(a, b);
        CHECK(chord_distance(a, 6928.0) <= chord_distance(b, 6928.0) + 1e-12);
    }
}

TEST_CASE("max_isl_range reproduces the 5,014 km figure with the visibility preset") {
    const auto earth = EarthModel::visibility_preset();
    CHECK(max_isl_range(550.0, earth) == doctest::Approx(5013.91663273334).epsilon(1e-12));
    CHECK(max_isl_range(earth.occlusion_altitude_km, earth) == 0.0);

    EarthModel bare{6378.0, 0.0, EarthModel::kMuKm3S2};
    CHECK(max_isl_range(550.0, bare) == doctest::Approx(5410.47132882155).epsilon(1e-12));
    CHECK_THROWS_AS(max_isl_range(50.0, earth), std::domain_error);
}

TEST_CASE("line_of_sight blocks through-Earth segments and accepts near ones") {
    const auto earth = EarthModel::latency_preset();
    CHECK_FALSE(line_of_sight({6928, 0, 0}, {-6928, 0, 0}, earth));
    CHECK(line_of_sight({6928, 0, 0}, {6928, 100, 0}, earth));
    CHECK_THROWS_AS(line_of_sight({6928, 0, 0}, {6000, 0, 0}, earth), std::domain_error);
    CHECK_THROWS_AS(line_of_sight({100, 0, 0}, {6928, 0, 0}, earth), std::domain_error);
}

TEST_CASE("line_of_sight flips exactly at the max ISL range") {
    const auto earth = EarthModel::visibility_preset();
    const double r = earth.radius_km + 550.0;
    const double limit = max_isl_range(550.0, earth);

    const auto [in_a, in_b] = points_at_separation(r, limit - 1.0);
    CHECK(line_of_sight(in_a, in_b, earth));
    CHECK(sampled_min_origin_distance(in_a, in_b) > earth.occlusion_radius_km());

    const auto [out_a, out_b] = points_at_separation(r, limit + 1.0);
    CHECK_FALSE(line_of_sight(out_a, out_b, earth));
    CHECK(sampled_min_origin_distance(out_a, out_b) < earth.occlusion_radius_km());
}

TEST_CASE("line_of_sight is symmetric and equivalent to the range test at fixed altitude") {
    const auto earth = EarthModel::visibility_preset();
    const double altitude = 550.0;
    const double r = earth.radius_km + altitude;
    const double limit = max_isl_range(altitude, earth);

    std::mt19937 rng(7002);
    for (int i = 0; i < 500; ++i) {
        const Vec3 a = random_unit(rng) * r;
        const Vec3 b = random_unit(rng) * r;
        if (distance(a, b) < 1e-9) continue;
        const bool los = line_of_sight(a, b, earth);
        CHECK(los == line_of_sight(b, a, earth));
        CHECK(los == (distance(a, b) <= limit));
    }
}
