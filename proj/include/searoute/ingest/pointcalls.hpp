#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "searoute/ingest/gazetteer.hpp"
#include "searoute/itinerary/pointcall.hpp"

namespace searoute::ingest {

inline constexpr const char* kPointcallHeader =
    "data_block_local_id,ship_id,ship_name,captain_id,toponym,geo_id,out_date,in_date,rank,function,status,"
    "historian_marker,tonnage,flag,homeport";

struct QuarantinedRow {
    std::size_t line = 0;
    std::string reason;
    std::string content;
};

struct PointcallLoad {
    std::vector<itinerary::Pointcall> records;
    std::vector<QuarantinedRow> quarantined;
    std::size_t input_rows = 0;
    /// Document-level consistency notes (rank gaps, several 'O' points).
    std::vector<std::string> warnings;

    nlohmann::json report() const;
};

/// Rows with an unknown geo_id or an unparsable field are quarantined, never
/// dropped: records.size() + quarantined.size() == input_rows. Throws
/// SchemaMismatch unless the header is exactly kPointcallHeader.
PointcallLoad parse_pointcalls(std::istream& in, const Gazetteer& gazetteer);
PointcallLoad load_pointcalls(const std::filesystem::path& path, const Gazetteer& gazetteer);

}  // namespace searoute::ingest
