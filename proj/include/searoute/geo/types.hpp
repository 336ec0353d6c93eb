#pragma once

#include <string>
#include <vector>

namespace searoute::geo {

/// A WGS84 position in decimal degrees.
struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;

    bool valid() const noexcept {
        return lon >= -180.0 && lon <= 180.0 && lat >= -90.0 && lat <= 90.0;
    }

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Throws BadCoordinates when `p` is outside [-180,180] x [-90,90].
GeoPoint checked_point(double lon, double lat);

/// Ordered route geometry. A zero-length route is the only case where two
/// consecutive points may coincide.
struct Polyline {
    std::vector<GeoPoint> points;

    std::size_t size() const noexcept { return points.size(); }
    const GeoPoint& front() const { return points.front(); }
    const GeoPoint& back() const { return points.back(); }

    friend bool operator==(const Polyline&, const Polyline&) = default;
};

/// Drops consecutive duplicates, keeping at least the two endpoints.
Polyline dedupe_consecutive(Polyline path);

Polyline reversed(Polyline path);

/// One land polygon (outer ring only). The ring is always stored closed.
struct LandPolygon {
    std::string id;
    std::vector<GeoPoint> ring;
    double area_km2 = 0.0;

    friend bool operator==(const LandPolygon&, const LandPolygon&) = default;
};

/// Closes `ring` if needed and computes the spherical area. Throws
/// UnsupportedGeometry for rings with fewer than three distinct vertices.
LandPolygon make_land_polygon(std::string id, std::vector<GeoPoint> ring);

}  // namespace searoute::geo
