#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "searoute/geo/types.hpp"

namespace searoute::ingest {

enum class PlaceKind { Port, Zone, Strait, Other };

struct GazetteerEntry {
    std::string geo_id;
    std::string toponym;
    geo::GeoPoint position;
    std::string admin_unit;
    PlaceKind kind = PlaceKind::Port;

    friend bool operator==(const GazetteerEntry&, const GazetteerEntry&) = default;
};

class Gazetteer {
public:
    /// Throws DuplicateId if the id is already present.
    void add(GazetteerEntry entry);
    const GazetteerEntry* find(const std::string& geo_id) const;
    std::optional<geo::GeoPoint> position(const std::string& geo_id) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, GazetteerEntry>& entries() const { return entries_; }
    /// Ids of every entry of kind port.
    std::set<std::string> ports() const;

    friend bool operator==(const Gazetteer&, const Gazetteer&) = default;

private:
    std::map<std::string, GazetteerEntry> entries_;
};

/// Header `geo_id,toponym,lon,lat,admin_unit,kind`. Throws SchemaMismatch,
/// DuplicateId, BadCoordinates (also for non-numeric coordinates) or
/// CorruptFile for an unknown kind.
Gazetteer parse_gazetteer(std::istream& in);
Gazetteer load_gazetteer(const std::filesystem::path& path);

/// One geo_id per line; blank lines and '#' comments ignored.
std::set<std::string> load_id_list(const std::filesystem::path& path);

}  // namespace searoute::ingest
