#include "searoute/path/route_json.hpp"

#include "searoute/error.hpp"

namespace searoute::path {

using nlohmann::json;

json line_coordinates(const Polyline& path) {
    json coords = json::array();
    for (const auto& p : path.points) coords.push_back({p.lon, p.lat});
    return coords;
}

Polyline line_from_coordinates(const json& coordinates) {
    Polyline out;
    for (const auto& c : coordinates) {
        out.points.push_back(geo::checked_point(c.at(0).get<double>(), c.at(1).get<double>()));
    }
    return out;
}

json route_to_geojson(const RouteResult& route, const RouteJsonOptions& options) {
    json props = {
        {"offset_used_km", route.offset_used_km},
        {"spacing_used_km", route.spacing_used_km},
        {"recursion_depth_reached", route.recursion_depth_reached},
        {"point_count", route.point_count},
    };
    if (options.include_duration) props["duration_ms"] = route.duration_ms;
    return {
        {"type", "Feature"},
        {"geometry", {{"type", "LineString"}, {"coordinates", line_coordinates(route.path)}}},
        {"properties", std::move(props)},
    };
}

RouteResult route_from_geojson(const json& feature) {
    const auto& geometry = feature.at("geometry");
    if (geometry.at("type") != "LineString") throw UnsupportedGeometry("route feature is not a LineString");
    const auto& props = feature.at("properties");
    RouteResult r;
    r.path = line_from_coordinates(geometry.at("coordinates"));
    r.offset_used_km = props.at("offset_used_km").get<double>();
    r.spacing_used_km = props.at("spacing_used_km").get<double>();
    r.duration_ms = props.value("duration_ms", 0.0);
    r.recursion_depth_reached = props.value("recursion_depth_reached", 0);
    r.point_count = r.path.points.size();
    return r;
}

}  // namespace searoute::path
