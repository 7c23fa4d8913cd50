#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bohmh::cli {

using Json = nlohmann::ordered_json;

/// Column table with a metadata object; the common shape of every data file.
struct Table {
    Json meta = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// `# key: <json value>` header lines, a column-name line, then rows printed
/// with 17 significant digits. NaN is written as `nan`.
void write_csv(const Table& t, std::ostream& out);

/// {"meta": {...}, "columns": [...], "samples": [[...], ...]}; NaN becomes null.
void write_json(const Table& t, std::ostream& out);

/// Inverse of write_csv. Throws DomainError on malformed input.
Table read_csv(std::istream& in);

} // namespace bohmh::cli
