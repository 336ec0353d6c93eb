#include "searoute/geo/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"

namespace searoute::geo {

GeoPoint checked_point(double lon, double lat) {
    GeoPoint p{lon, lat};
    if (!p.valid() || std::isnan(lon) || std::isnan(lat)) {
        std::ostringstream msg;
        msg << "coordinates out of range: lon=" << lon << " lat=" << lat;
        throw BadCoordinates(msg.str());
    }
    return p;
}

Polyline dedupe_consecutive(Polyline path) {
    if (path.points.size() <= 2) return path;
    std::vector<GeoPoint> out;
    out.reserve(path.points.size());
    for (const auto& p : path.points) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    if (out.size() < 2) out.push_back(out.back());
    path.points = std::move(out);
    return path;
}

Polyline reversed(Polyline path) {
    std::reverse(path.points.begin(), path.points.end());
    return path;
}

LandPolygon make_land_polygon(std::string id, std::vector<GeoPoint> ring) {
    if (!ring.empty() && !(ring.front() == ring.back())) ring.push_back(ring.front());
    std::set<std::pair<double, double>> distinct;
    for (const auto& p : ring) {
        if (!p.valid()) throw BadCoordinates("polygon " + id + " has a vertex out of range");
        distinct.emplace(p.lon, p.lat);
    }
    if (distinct.size() < 3) {
        throw UnsupportedGeometry("polygon " + id + " has fewer than three distinct vertices");
    }
    LandPolygon poly;
    poly.id = std::move(id);
    poly.area_km2 = spherical_ring_area_km2(ring);
    poly.ring = std::move(ring);
    return poly;
}

}  // namespace searoute::geo
