#include "searoute/ingest/csv.hpp"

#include <algorithm>

#include <boost/tokenizer.hpp>

#include "searoute/error.hpp"

namespace searoute::ingest {

std::vector<CsvRow> read_csv(std::istream& in) {
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    const boost::escaped_list_separator<char> separator('\\', ',', '"');
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (std::count(line.begin(), line.end(), '"') % 2 != 0) {
            throw CorruptFile("line " + std::to_string(number) + ": unterminated quote");
        }
        CsvRow row{number, {}};
        try {
            Tokenizer tok(line, separator);
            row.cells.assign(tok.begin(), tok.end());
        } catch (const boost::escaped_list_error& e) {
            throw CorruptFile("line " + std::to_string(number) + ": " + e.what());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string join_cells(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

}  // namespace searoute::ingest
