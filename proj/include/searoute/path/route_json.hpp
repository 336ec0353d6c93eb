#pragma once

#include <json.hpp>

#include "searoute/path/sea_route.hpp"

namespace searoute::path {

struct RouteJsonOptions {
    /// Wall-clock time differs between runs; leave it out for reproducible output.
    bool include_duration = true;
};

nlohmann::json line_coordinates(const Polyline& path);
Polyline line_from_coordinates(const nlohmann::json& coordinates);

/// GeoJSON Feature with a LineString geometry and the computation metadata
/// as properties.
nlohmann::json route_to_geojson(const RouteResult& route, const RouteJsonOptions& options = {});

/// Inverse of route_to_geojson (cache_hit is not serialised).
RouteResult route_from_geojson(const nlohmann::json& feature);

}  // namespace searoute::path
