#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "searoute/geo/coast_index.hpp"

namespace searoute::ingest {

/// Identifies coastline content for cache invalidation.
struct DatasetFingerprint {
    std::string sha256;      ///< hex digest of the file bytes
    std::string resolution;  ///< e.g. "i" for GSHHS_i_L1, else the file stem

    /// "<resolution>:<sha256>"
    std::string key() const;
    friend bool operator==(const DatasetFingerprint&, const DatasetFingerprint&) = default;
};

std::string sha256_hex(const std::string& bytes);
DatasetFingerprint fingerprint_bytes(const std::string& bytes, const std::filesystem::path& path);

struct CoastlineLoad {
    geo::CoastIndex index;
    DatasetFingerprint fingerprint;
    std::string format;  ///< "geojson" or "shapefile"
    std::size_t polygon_count = 0;
    std::size_t filtered_count = 0;

    nlohmann::json report() const;
};

/// Polygon and MultiPolygon features (outer rings; holes are ignored). An
/// `area_km2` property is used when positive, otherwise the area is computed.
/// The polygon id is the feature's `id`, else `properties.id`, else its
/// position. Throws UnsupportedGeometry for other geometry types, CorruptFile
/// for structurally invalid documents, BadCoordinates for invalid positions.
std::vector<geo::LandPolygon> polygons_from_geojson(const nlohmann::json& doc);

/// ESRI polygon shapefile (types 5, 15, 25). Clockwise rings are land;
/// counter-clockwise rings are holes and are skipped. Throws CorruptFile on
/// malformed content and UnsupportedGeometry for non-polygon shape types.
std::vector<geo::LandPolygon> polygons_from_shapefile(const std::string& bytes);

/// Dispatches on the extension: ".shp" is read as a shapefile, anything else
/// as GeoJSON. Throws CorruptFile if the file cannot be read.
CoastlineLoad load_coastline(const std::filesystem::path& path,
                             double min_island_area_km2 = geo::CoastIndex::kDefaultMinIslandAreaKm2);

std::string read_file(const std::filesystem::path& path);

}  // namespace searoute::ingest
