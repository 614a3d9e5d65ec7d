#pragma once

#include <cmath>
#include <stdexcept>

// Earth-centered geometric primitives shared by every other module:
// inertial-frame vectors, chord/arc lengths, occlusion-limited line of
// sight, and the grazing-incidence ISL range limit.

namespace owsn {

inline constexpr double kVacuumLightSpeedKmS = 299792.458;  // km/s, exact
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Kilometers in a non-rotating Earth-centered inertial frame.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
    return v / n;
}

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Spherical Earth with an occlusion shell: a link is considered blocked
// when its segment dips below radius_km + occlusion_altitude_km.
//
// Two presets are provided because the source material uses different
// Earth radii for the latency arithmetic (6,378 km) and for the 5,014 km
// visibility limit (reproduced by 6,371 km with an 80 km grazing shell).
struct EarthModel {
    double radius_km;
    double occlusion_altitude_km;
    double gravitational_parameter_km3_s2;

    // WGS-84 gravitational parameter; the speed/period figures quoted for
    // 550 km orbits follow from it.
    static constexpr double kMuKm3S2 = 398600.4418;

    static EarthModel latency_preset() { return {6378.0, 80.0, kMuKm3S2}; }
    static EarthModel visibility_preset() { return {6371.0, 80.0, kMuKm3S2}; }

    void validate() const;
    double occlusion_radius_km() const { return radius_km + occlusion_altitude_km; }
};

// Straight-line distance between two points with angular separation
// theta_deg on a circle of the given radius.
double chord_distance(double theta_deg, double radius_km);

// Along-circle distance for the same separation.
double arc_distance(double theta_deg, double radius_km);

// True when segment a-b clears the occlusion sphere. Both endpoints must
// lie strictly outside it.
bool line_of_sight(const Vec3& a, const Vec3& b, const EarthModel& earth);

// Longest grazing-incidence link between two satellites at altitude_km:
// 2*sqrt((R+h)^2 - (R+h_occ)^2).
double max_isl_range(double altitude_km, const EarthModel& earth);

}  // namespace owsn
