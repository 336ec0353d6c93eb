#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "searoute/geo/types.hpp"

namespace searoute::geo {

/// Mean radius of the WGS84 ellipsoid, km.
inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kKmPerDegree = kPi * kEarthRadiusKm / 180.0;

inline constexpr double deg2rad(double d) { return d * kPi / 180.0; }
inline constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

/// Great-circle distance on the mean sphere, km.
double haversine_distance(GeoPoint a, GeoPoint b);

/// Area enclosed by a ring on the mean sphere, km^2. Uses the equal-area
/// cylindrical line integral, exact for edges that are straight in
/// (lon, sin lat) space; orientation independent.
double spherical_ring_area_km2(std::span<const GeoPoint> ring);

/// Signed shoelace area in raw lon/lat degrees; positive for
/// counter-clockwise rings.
double planar_signed_area_deg2(std::span<const GeoPoint> ring);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 unit() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
    }
    Vec2 perp_right() const { return {y, -x}; }
};

/// Equirectangular tangent frame centred on an origin, coordinates in km.
/// Accurate to well under 1 % within a few hundred km of the origin, which
/// is the scale at which coastline offsets are measured.
class LocalFrame {
public:
    explicit LocalFrame(GeoPoint origin)
        : origin_(origin), kx_(kKmPerDegree * std::cos(deg2rad(origin.lat))) {
        if (kx_ < 1e-6) kx_ = 1e-6;
    }

    Vec2 to_plane(GeoPoint p) const {
        double dlon = p.lon - origin_.lon;
        if (dlon > 180.0) dlon -= 360.0;
        if (dlon < -180.0) dlon += 360.0;
        return {dlon * kx_, (p.lat - origin_.lat) * kKmPerDegree};
    }

    GeoPoint to_geo(Vec2 v) const {
        double lon = origin_.lon + v.x / kx_;
        double lat = origin_.lat + v.y / kKmPerDegree;
        if (lon > 180.0) lon -= 360.0;
        if (lon < -180.0) lon += 360.0;
        lat = std::clamp(lat, -90.0, 90.0);
        return {lon, lat};
    }

    GeoPoint origin() const { return origin_; }

private:
    GeoPoint origin_;
    double kx_;
};

/// Closest point on segment [a, b] to `p`, all in one plane.
Vec2 closest_on_segment(Vec2 p, Vec2 a, Vec2 b);

}  // namespace searoute::geo
