#include "searoute/ingest/gazetteer.hpp"

#include <charconv>
#include <fstream>

#include "searoute/error.hpp"
#include "searoute/ingest/csv.hpp"

namespace searoute::ingest {

namespace {

const std::vector<std::string> kHeader{"geo_id", "toponym", "lon", "lat", "admin_unit", "kind"};

double coordinate(const std::string& text, const CsvRow& row) {
    double value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw BadCoordinates("line " + std::to_string(row.line) + ": non-numeric coordinate '" + text + "'");
    }
    return value;
}

PlaceKind kind_from(const std::string& text, const CsvRow& row) {
    if (text == "port") return PlaceKind::Port;
    if (text == "zone") return PlaceKind::Zone;
    if (text == "strait") return PlaceKind::Strait;
    if (text == "other") return PlaceKind::Other;
    throw CorruptFile("line " + std::to_string(row.line) + ": unknown place kind '" + text + "'");
}

}  // namespace

void Gazetteer::add(GazetteerEntry entry) {
    const std::string id = entry.geo_id;
    if (!entries_.emplace(id, std::move(entry)).second) throw DuplicateId("duplicate geo_id " + id);
}

const GazetteerEntry* Gazetteer::find(const std::string& geo_id) const {
    auto it = entries_.find(geo_id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<geo::GeoPoint> Gazetteer::position(const std::string& geo_id) const {
    if (const auto* e = find(geo_id)) return e->position;
    return std::nullopt;
}

std::set<std::string> Gazetteer::ports() const {
    std::set<std::string> out;
    for (const auto& [id, e] : entries_) {
        if (e.kind == PlaceKind::Port) out.insert(id);
    }
    return out;
}

Gazetteer parse_gazetteer(std::istream& in) {
    const auto rows = read_csv(in);
    if (rows.empty() || rows.front().cells != kHeader) {
        throw SchemaMismatch("gazetteer header must be " + join_cells(kHeader));
    }
    Gazetteer g;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.cells.size() != kHeader.size()) {
            throw CorruptFile("line " + std::to_string(row.line) + ": expected 6 fields");
        }
        const double lon = coordinate(row.cells[2], row), lat = coordinate(row.cells[3], row);
        geo::GeoPoint p{lon, lat};
        if (!p.valid()) {
            throw BadCoordinates("line " + std::to_string(row.line) + ": coordinates out of range");
        }
        g.add({row.cells[0], row.cells[1], p, row.cells[4], kind_from(row.cells[5], row)});
    }
    return g;
}

Gazetteer load_gazetteer(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorruptFile("cannot open " + path.string());
    return parse_gazetteer(in);
}

std::set<std::string> load_id_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorruptFile("cannot open " + path.string());
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.insert(line);
    }
    return out;
}

}  // namespace searoute::ingest
