#include "owsn/geometry.hpp"

#include <algorithm>

namespace owsn {

void EarthModel::validate() const {
    if (!(radius_km > 0.0)) throw std::invalid_argument("EarthModel: radius_km must be > 0");
    if (!(occlusion_altitude_km >= 0.0))
        throw std::invalid_argument("EarthModel: occlusion_altitude_km must be >= 0");
    if (!(gravitational_parameter_km3_s2 > 0.0))
        throw std::invalid_argument("EarthModel: gravitational parameter must be > 0");
}

double chord_distance(double theta_deg, double radius_km) {
    if (!(theta_deg >= 0.0 && theta_deg <= 360.0))
        throw std::domain_error("chord_distance: theta_deg outside [0, 360]");
    if (!(radius_km > 0.0)) throw std::domain_error("chord_distance: radius_km must be > 0");
    return 2.0 * radius_km * std::sin(deg2rad(theta_deg) / 2.0);
}

double arc_distance(double theta_deg, double radius_km) {
    if (!(theta_deg >= 0.0)) throw std::domain_error("arc_distance: theta_deg must be >= 0");
    if (!(radius_km > 0.0)) throw std::domain_error("arc_distance: radius_km must be > 0");
    return 2.0 * kPi * radius_km * (theta_deg / 360.0);
}

bool line_of_sight(const Vec3& a, const Vec3& b, const EarthModel& earth) {
    earth.validate();
    const double blocked_below = earth.occlusion_radius_km();
    if (norm(a) <= blocked_below || norm(b) <= blocked_below)
        throw std::domain_error("line_of_sight: endpoint inside the occlusion sphere");

    // Minimum distance from the origin to segment a-b.
    const Vec3 d = b - a;
    const double len2 = dot(d, d);
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(-dot(a, d) / len2, 0.0, 1.0);
    return norm(a + t * d) > blocked_below;
}

double max_isl_range(double altitude_km, const EarthModel& earth) {
    earth.validate();
    if (altitude_km < earth.occlusion_altitude_km)
        throw std::domain_error("max_isl_range: altitude below occlusion altitude");
    const double rh = earth.radius_km + altitude_km;
    const double ro = earth.occlusion_radius_km();
    return 2.0 * std::sqrt(rh * rh - ro * ro);
}

}  // namespace owsn
