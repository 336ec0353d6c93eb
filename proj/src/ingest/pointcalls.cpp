#include "searoute/ingest/pointcalls.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "searoute/error.hpp"
#include "searoute/ingest/csv.hpp"

namespace searoute::ingest {

using itinerary::Pointcall;

namespace {

enum Column {
    kBlock, kShip, kShipName, kCaptain, kToponym, kGeo, kOut, kIn, kRank, kFunction, kStatus, kHistorian,
    kTonnage, kFlag, kHomeport, kColumns
};

std::vector<std::string> header_cells() {
    std::vector<std::string> cells;
    std::string h = kPointcallHeader;
    std::size_t start = 0;
    while (true) {
        const auto comma = h.find(',', start);
        cells.push_back(h.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

// Returns an empty string on success, otherwise the quarantine reason.
std::string parse_row(const CsvRow& row, const Gazetteer& gazetteer, Pointcall& p) {
    const auto& c = row.cells;
    if (c.size() != kColumns) return "expected " + std::to_string(kColumns) + " fields, got " + std::to_string(c.size());
    if (c[kBlock].empty()) return "missing data_block_local_id";
    if (c[kShip].empty()) return "missing ship_id";
    if (!gazetteer.find(c[kGeo])) return "unknown geo_id '" + c[kGeo] + "'";
    p.data_block_local_id = c[kBlock];
    p.ship_id = c[kShip];
    p.ship_name = c[kShipName];
    p.captain_id = c[kCaptain];
    p.toponym = c[kToponym];
    p.geo_id = c[kGeo];
    try {
        p.out_date = itinerary::parse_flexdate(c[kOut]);
        p.in_date = itinerary::parse_flexdate(c[kIn]);
    } catch (const MalformedDate& e) {
        return std::string("MalformedDate: ") + e.what();
    }
    const auto* end = c[kRank].data() + c[kRank].size();
    const auto [ptr, ec] = std::from_chars(c[kRank].data(), end, p.rank);
    if (ec != std::errc() || ptr != end || p.rank < 1) return "rank must be an integer >= 1";
    const auto function = itinerary::parse_function(c[kFunction]);
    if (!function) return "unknown function '" + c[kFunction] + "'";
    p.function = *function;
    const auto status = itinerary::parse_status(c[kStatus]);
    if (!status) return "unknown status '" + c[kStatus] + "'";
    p.status = *status;
    const auto marker = itinerary::parse_marker(c[kHistorian]);
    if (!marker) return "unknown historian_marker '" + c[kHistorian] + "'";
    p.historian_marker = *marker;
    if (!c[kTonnage].empty()) p.attributes["tonnage"] = c[kTonnage];
    if (!c[kFlag].empty()) p.attributes["flag"] = c[kFlag];
    if (!c[kHomeport].empty()) p.attributes["homeport"] = c[kHomeport];
    return {};
}

std::vector<std::string> document_warnings(const std::vector<Pointcall>& records) {
    std::map<std::string, std::vector<const Pointcall*>> docs;
    for (const auto& p : records) docs[p.data_block_local_id].push_back(&p);
    std::vector<std::string> out;
    for (const auto& [id, rows] : docs) {
        std::set<int> ranks;
        int observations = 0;
        std::set<std::string> ships;
        for (const auto* p : rows) {
            ranks.insert(p->rank);
            observations += p->function == itinerary::Function::O;
            ships.insert(p->ship_id);
        }
        if (ranks.size() != rows.size() || *ranks.rbegin() != static_cast<int>(rows.size())) {
            out.push_back("document " + id + ": ranks are not unique and contiguous from 1");
        }
        if (observations > 1) out.push_back("document " + id + ": several 'O' points");
        if (ships.size() > 1) out.push_back("document " + id + ": rows of several ships");
    }
    return out;
}

}  // namespace

nlohmann::json PointcallLoad::report() const {
    nlohmann::json q = nlohmann::json::array();
    for (const auto& row : quarantined) q.push_back({{"line", row.line}, {"reason", row.reason}, {"content", row.content}});
    return {
        {"input_rows", input_rows},
        {"records", records.size()},
        {"quarantined", std::move(q)},
        {"warnings", warnings},
    };
}

PointcallLoad parse_pointcalls(std::istream& in, const Gazetteer& gazetteer) {
    const auto rows = read_csv(in);
    if (rows.empty() || rows.front().cells != header_cells()) {
        throw SchemaMismatch(std::string("pointcall header must be ") + kPointcallHeader);
    }
    PointcallLoad load;
    load.input_rows = rows.size() - 1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        Pointcall p;
        const std::string reason = parse_row(rows[i], gazetteer, p);
        if (reason.empty()) {
            load.records.push_back(std::move(p));
        } else {
            load.quarantined.push_back({rows[i].line, reason, join_cells(rows[i].cells)});
        }
    }
    load.warnings = document_warnings(load.records);
    return load;
}

PointcallLoad load_pointcalls(const std::filesystem::path& path, const Gazetteer& gazetteer) {
    std::ifstream in(path);
    if (!in) throw CorruptFile("cannot open " + path.string());
    return parse_pointcalls(in, gazetteer);
}

}  // namespace searoute::ingest
