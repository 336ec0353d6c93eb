#pragma once

// Synthetic coastline fixtures with known geometry.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "searoute/geo/types.hpp"

namespace fixtures {

using searoute::geo::GeoPoint;
using searoute::geo::LandPolygon;

inline constexpr double kKmPerDeg = 3.14159265358979323846 * 6371.0088 / 180.0;

/// Point `east_km`, `north_km` away from `origin` (equirectangular).
inline GeoPoint offset(GeoPoint origin, double east_km, double north_km) {
    const double coslat = std::cos(origin.lat * 3.14159265358979323846 / 180.0);
    return {origin.lon + east_km / (kKmPerDeg * coslat), origin.lat + north_km / kKmPerDeg};
}

inline LandPolygon polygon(std::string id, const std::vector<GeoPoint>& ring) {
    return searoute::geo::make_land_polygon(std::move(id), ring);
}

/// Axis-aligned square island, `side_km` wide, counter-clockwise.
inline LandPolygon square(std::string id, GeoPoint center, double side_km) {
    const double h = side_km / 2;
    return polygon(std::move(id), {offset(center, -h, -h), offset(center, h, -h), offset(center, h, h),
                                   offset(center, -h, h)});
}

/// Rectangle of width `east_km` x height `north_km` with its south-west corner at `sw`.
inline LandPolygon rectangle(std::string id, GeoPoint sw, double east_km, double north_km) {
    return polygon(std::move(id), {sw, offset(sw, east_km, 0), offset(sw, east_km, north_km), offset(sw, 0, north_km)});
}

/// Star-shaped island with `vertices` vertices and radii in [0.6, 1] * radius_km.
inline LandPolygon star_island(std::string id, GeoPoint center, double radius_km, int vertices, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.6, 1.0);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::vector<GeoPoint> ring;
    for (int k = 0; k < vertices; ++k) {
        const double theta = 2 * 3.14159265358979323846 * (k + jitter(rng)) / vertices;
        const double r = radius_km * radius(rng);
        ring.push_back(offset(center, r * std::cos(theta), r * std::sin(theta)));
    }
    return polygon(std::move(id), ring);
}

/// Land to the west of a north-south coastline through `coast_point`,
/// 300 km wide and 400 km tall.
inline LandPolygon straight_west_coast(GeoPoint coast_point) {
    const double west = offset(coast_point, -300, 0).lon;
    const double south = offset(coast_point, 0, -200).lat, north = offset(coast_point, 0, 200).lat;
    return polygon("mainland", {{west, south}, {coast_point.lon, south}, {coast_point.lon, north}, {west, north}});
}

/// Two 40 km square blocks joined by a 3 km wide, 20 km long isthmus
/// centred on `center`; the isthmus runs east-west.
inline LandPolygon isthmus(GeoPoint center) {
    auto at = [&](double e, double n) { return offset(center, e, n); };
    return polygon("isthmus", {at(-50, -20), at(-10, -20), at(-10, -1.5), at(10, -1.5), at(10, -20), at(50, -20),
                               at(50, 20), at(10, 20), at(10, 1.5), at(-10, 1.5), at(-10, 20), at(-50, 20)});
}

struct Archipelago {
    std::vector<LandPolygon> polygons;
    GeoPoint south_west;
    GeoPoint north_east;
    std::vector<std::string> islet_ids;
};

/// 22 star islands and 3 islets (< 1 km^2) on a 5 x 5 grid of 60 km cells.
inline Archipelago archipelago(std::uint64_t seed = 42) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(8.0, 22.0);
    std::uniform_int_distribution<int> verts(7, 16);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    Archipelago out;
    out.south_west = {-4.0, 46.0};
    const double cell = 60.0;
    int n = 0;
    for (int row = 0; row < 5; ++row) {
        for (int col = 0; col < 5; ++col) {
            const GeoPoint c = offset(out.south_west, cell * (col + 0.5) + shift(rng), cell * (row + 0.5) + shift(rng));
            const std::string id = "isle-" + std::to_string(row) + "-" + std::to_string(col);
            if (n == 6 || n == 13 || n == 19) {
                // ~0.4-0.5 km^2 islet
                out.polygons.push_back(square(id, c, 0.7));
                out.islet_ids.push_back(id);
            } else {
                out.polygons.push_back(star_island(id, c, radius(rng), verts(rng), rng));
            }
            ++n;
        }
    }
    out.north_east = offset(out.south_west, cell * 5, cell * 5);
    return out;
}

}  // namespace fixtures
