#include "searoute/ingest/coastline.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>

#include "searoute/error.hpp"
#include "searoute/geo/measure.hpp"

namespace searoute::ingest {

using geo::GeoPoint;
using geo::LandPolygon;
using nlohmann::json;

std::string DatasetFingerprint::key() const { return resolution + ":" + sha256; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

DatasetFingerprint fingerprint_bytes(const std::string& bytes, const std::filesystem::path& path) {
    DatasetFingerprint fp;
    fp.sha256 = sha256_hex(bytes);
    const std::string stem = path.stem().string();
    static const std::regex gshhs(R"(GSHHS_([a-z])_L\d+)", std::regex::icase);
    std::smatch m;
    fp.resolution = std::regex_match(stem, m, gshhs) ? m[1].str() : stem;
    return fp;
}

json CoastlineLoad::report() const {
    return {
        {"format", format},
        {"polygon_count", polygon_count},
        {"filtered_count", filtered_count},
        {"min_island_area_km2", index.min_island_area_km2()},
        {"fingerprint", fingerprint.key()},
    };
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptFile("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

std::vector<GeoPoint> ring_from_json(const json& coords) {
    if (!coords.is_array()) throw CorruptFile("ring is not an array");
    std::vector<GeoPoint> ring;
    for (const auto& c : coords) {
        if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number()) {
            throw CorruptFile("bad position in ring");
        }
        ring.push_back(geo::checked_point(c[0].get<double>(), c[1].get<double>()));
    }
    return ring;
}

LandPolygon polygon_with_area(std::string id, std::vector<GeoPoint> ring, const json& props) {
    LandPolygon poly = geo::make_land_polygon(std::move(id), std::move(ring));
    if (props.is_object() && props.contains("area_km2") && props["area_km2"].is_number()) {
        const double given = props["area_km2"].get<double>();
        if (given > 0) poly.area_km2 = given;
    }
    return poly;
}

std::string feature_id(const json& feature, std::size_t position) {
    if (feature.contains("id")) {
        const auto& id = feature["id"];
        return id.is_string() ? id.get<std::string>() : id.dump();
    }
    const auto props = feature.value("properties", json::object());
    if (props.is_object() && props.contains("id")) {
        const auto& id = props["id"];
        return id.is_string() ? id.get<std::string>() : id.dump();
    }
    return "feature-" + std::to_string(position);
}

void append_feature(const json& feature, std::size_t position, std::vector<LandPolygon>& out) {
    if (!feature.is_object() || feature.value("type", "") != "Feature") throw CorruptFile("expected a Feature");
    const auto& geometry = feature.contains("geometry") ? feature["geometry"] : json();
    if (geometry.is_null()) return;
    const std::string type = geometry.value("type", "");
    const json props = feature.value("properties", json::object());
    const std::string id = feature_id(feature, position);
    if (!geometry.contains("coordinates")) throw CorruptFile("geometry without coordinates");
    const auto& coords = geometry["coordinates"];
    if (type == "Polygon") {
        if (!coords.is_array() || coords.empty()) throw CorruptFile("empty polygon");
        out.push_back(polygon_with_area(id, ring_from_json(coords[0]), props));
    } else if (type == "MultiPolygon") {
        if (!coords.is_array()) throw CorruptFile("bad multipolygon");
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (!coords[k].is_array() || coords[k].empty()) throw CorruptFile("empty polygon");
            // A supplied area describes the whole feature, so parts get computed areas.
            out.push_back(polygon_with_area(coords.size() == 1 ? id : id + "#" + std::to_string(k),
                                            ring_from_json(coords[k][0]), coords.size() == 1 ? props : json()));
        }
    } else {
        throw UnsupportedGeometry("unsupported geometry type '" + type + "' in feature " + id);
    }
}

// Shapefile fields: big-endian integers in headers, little-endian elsewhere.
class ByteReader {
public:
    explicit ByteReader(const std::string& bytes) : bytes_(bytes) {}

    void need(std::size_t offset, std::size_t count) const {
        if (offset + count > bytes_.size()) throw CorruptFile("shapefile truncated");
    }
    std::int32_t be32(std::size_t o) const {
        need(o, 4);
        const auto* b = reinterpret_cast<const unsigned char*>(bytes_.data() + o);
        return static_cast<std::int32_t>((std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
                                         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]));
    }
    std::int32_t le32(std::size_t o) const {
        need(o, 4);
        const auto* b = reinterpret_cast<const unsigned char*>(bytes_.data() + o);
        return static_cast<std::int32_t>((std::uint32_t(b[3]) << 24) | (std::uint32_t(b[2]) << 16) |
                                         (std::uint32_t(b[1]) << 8) | std::uint32_t(b[0]));
    }
    double le_double(std::size_t o) const {
        need(o, 8);
        const auto* b = reinterpret_cast<const unsigned char*>(bytes_.data() + o);
        std::uint64_t bits = 0;
        for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[i];
        double value;
        std::memcpy(&value, &bits, sizeof value);
        return value;
    }
    std::size_t size() const { return bytes_.size(); }

private:
    const std::string& bytes_;
};

}  // namespace

std::vector<LandPolygon> polygons_from_geojson(const json& doc) {
    std::vector<LandPolygon> out;
    if (!doc.is_object()) throw CorruptFile("GeoJSON root is not an object");
    const std::string type = doc.value("type", "");
    if (type == "FeatureCollection") {
        if (!doc.contains("features") || !doc["features"].is_array()) throw CorruptFile("missing features array");
        const auto& features = doc["features"];
        for (std::size_t i = 0; i < features.size(); ++i) append_feature(features[i], i, out);
    } else if (type == "Feature") {
        append_feature(doc, 0, out);
    } else {
        throw CorruptFile("expected a FeatureCollection, got '" + type + "'");
    }
    return out;
}

std::vector<LandPolygon> polygons_from_shapefile(const std::string& bytes) {
    const ByteReader r(bytes);
    if (r.size() < 100 || r.be32(0) != 9994) throw CorruptFile("not a shapefile");
    const std::size_t declared = static_cast<std::size_t>(r.be32(24)) * 2;
    if (declared > r.size()) throw CorruptFile("shapefile truncated");
    const std::int32_t file_type = r.le32(32);
    if (file_type != 5 && file_type != 15 && file_type != 25) {
        throw UnsupportedGeometry("shapefile shape type " + std::to_string(file_type) + " is not a polygon type");
    }
    std::vector<LandPolygon> out;
    std::size_t offset = 100;
    while (offset + 8 <= declared) {
        const std::int32_t record = r.be32(offset);
        const std::size_t length = static_cast<std::size_t>(r.be32(offset + 4)) * 2;
        const std::size_t content = offset + 8;
        r.need(content, length);
        offset = content + length;
        const std::int32_t shape = r.le32(content);
        if (shape == 0) continue;
        if (shape != file_type) throw CorruptFile("mixed shape types in shapefile");
        const std::int32_t parts = r.le32(content + 36);
        const std::int32_t points = r.le32(content + 40);
        if (parts < 0 || points < 0) throw CorruptFile("negative part or point count");
        const std::size_t parts_at = content + 44;
        const std::size_t points_at = parts_at + 4 * static_cast<std::size_t>(parts);
        r.need(points_at, 16 * static_cast<std::size_t>(points));
        if (points_at + 16 * static_cast<std::size_t>(points) > offset) throw CorruptFile("record overflows");
        for (std::int32_t k = 0; k < parts; ++k) {
            const std::int32_t first = r.le32(parts_at + 4 * k);
            const std::int32_t last = k + 1 < parts ? r.le32(parts_at + 4 * (k + 1)) : points;
            if (first < 0 || last > points || first > last) throw CorruptFile("bad part index");
            std::vector<GeoPoint> ring;
            for (std::int32_t i = first; i < last; ++i) {
                const std::size_t at = points_at + 16 * static_cast<std::size_t>(i);
                ring.push_back(geo::checked_point(r.le_double(at), r.le_double(at + 8)));
            }
            if (geo::planar_signed_area_deg2(ring) > 0) continue;  // hole
            std::string id = "shp-" + std::to_string(record);
            if (parts > 1) id += "#" + std::to_string(k);
            out.push_back(geo::make_land_polygon(std::move(id), std::move(ring)));
        }
    }
    return out;
}

CoastlineLoad load_coastline(const std::filesystem::path& path, double min_island_area_km2) {
    const std::string bytes = read_file(path);
    CoastlineLoad load;
    std::vector<LandPolygon> polygons;
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".shp") {
        load.format = "shapefile";
        polygons = polygons_from_shapefile(bytes);
    } else {
        load.format = "geojson";
        json doc;
        try {
            doc = json::parse(bytes);
        } catch (const json::parse_error& e) {
            throw CorruptFile(path.string() + ": " + e.what());
        }
        polygons = polygons_from_geojson(doc);
    }
    load.fingerprint = fingerprint_bytes(bytes, path);
    load.index = geo::CoastIndex(std::move(polygons), min_island_area_km2);
    load.polygon_count = load.index.polygons().size();
    load.filtered_count = load.index.filtered_count();
    return load;
}

}  // namespace searoute::ingest
