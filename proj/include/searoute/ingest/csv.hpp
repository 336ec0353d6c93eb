#pragma once

#include <istream>
#include <string>
#include <vector>

namespace searoute::ingest {

struct CsvRow {
    /// 1-based line in the file (the header is line 1).
    std::size_t line = 0;
    std::vector<std::string> cells;
};

/// Comma-separated rows with double-quoted fields. A leading UTF-8 BOM and
/// trailing CR are stripped; blank lines are skipped. Throws CorruptFile on
/// an unterminated quote.
std::vector<CsvRow> read_csv(std::istream& in);

std::string join_cells(const std::vector<std::string>& cells);

}  // namespace searoute::ingest
