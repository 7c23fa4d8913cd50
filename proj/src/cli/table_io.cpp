#include "bohmh/cli/table_io.hpp"

#include "bohmh/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace bohmh::cli {

namespace {

std::string format_value(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_value(const std::string& field) {
    if (field == "nan") {
        return std::nan("");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw DomainError("csv: bad number '" + field + "'");
    }
    if (used != field.size()) {
        throw DomainError("csv: bad number '" + field + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

} // namespace

void write_csv(const Table& t, std::ostream& out) {
    for (const auto& [key, value] : t.meta.items()) {
        out << "# " << key << ": " << value.dump() << '\n';
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_value(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    Json j;
    j["meta"] = t.meta;
    j["columns"] = t.columns;
    Json samples = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (double v : row) {
            r.push_back(std::isnan(v) ? Json(nullptr) : Json(v));
        }
        samples.push_back(std::move(r));
    }
    j["samples"] = std::move(samples);
    out << j.dump(2) << '\n';
}

Table read_csv(std::istream& in) {
    Table t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ", 2);
            if (colon == std::string::npos) {
                throw DomainError("csv: malformed metadata line '" + line + "'");
            }
            const std::string key = line.substr(2, colon - 2);
            const std::string raw = line.substr(colon + 2);
            t.meta[key] = Json::parse(raw, nullptr, false);
            if (t.meta[key].is_discarded()) {
                throw DomainError("csv: malformed metadata value for '" + key + "'");
            }
            continue;
        }
        if (!have_header) {
            t.columns = split(line);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        for (const std::string& f : split(line)) {
            row.push_back(parse_value(f));
        }
        if (row.size() != t.columns.size()) {
            throw DomainError("csv: row has " + std::to_string(row.size()) + " fields, expected " +
                              std::to_string(t.columns.size()));
        }
        t.rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw DomainError("csv: missing column header");
    }
    return t;
}

} // namespace bohmh::cli
