#include "searoute/geo/measure.hpp"

namespace searoute::geo {

double haversine_distance(GeoPoint a, GeoPoint b) {
    const double phi1 = deg2rad(a.lat);
    const double phi2 = deg2rad(b.lat);
    const double dphi = phi2 - phi1;
    const double dlambda = deg2rad(b.lon - a.lon);
    const double s1 = std::sin(dphi * 0.5);
    const double s2 = std::sin(dlambda * 0.5);
    double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

double spherical_ring_area_km2(std::span<const GeoPoint> ring) {
    if (ring.size() < 3) return 0.0;
    double sum = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const GeoPoint& p = ring[i];
        const GeoPoint& q = ring[(i + 1) % n];
        double dlon = q.lon - p.lon;
        if (dlon > 180.0) dlon -= 360.0;
        if (dlon < -180.0) dlon += 360.0;
        sum += deg2rad(dlon) * (std::sin(deg2rad(p.lat)) + std::sin(deg2rad(q.lat)));
    }
    return std::abs(sum) * 0.5 * kEarthRadiusKm * kEarthRadiusKm;
}

double planar_signed_area_deg2(std::span<const GeoPoint> ring) {
    double sum = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const GeoPoint& p = ring[i];
        const GeoPoint& q = ring[(i + 1) % n];
        sum += p.lon * q.lat - q.lon * p.lat;
    }
    return sum * 0.5;
}

Vec2 closest_on_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.dot(ab);
    if (len2 <= 0.0) return a;
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return a + ab * t;
}

}  // namespace searoute::geo
