#include "anchormoment/output.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include "json.hpp"

namespace anchormoment {

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) return nullptr;
            return v;
        }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

void OutputRecord::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("OutputRecord: row width does not match columns");
    }
    rows.push_back(std::move(row));
}

std::string approx_text(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", value);
    return std::string("≈") + buf;
}

std::string approx_text(const ExactRational& value) { return approx_text(value.to_double()); }

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string current_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_csv(std::ostream& os, const OutputRecord& record) {
    os << "# command: " << record.command << '\n';
    os << "# version: " << record.metadata.version << '\n';
    if (record.metadata.seed) os << "# seed: " << *record.metadata.seed << '\n';
    if (record.metadata.timestamp) os << "# timestamp: " << *record.metadata.timestamp << '\n';
    for (const auto& [key, value] : record.parameters) {
        os << "# parameter: " << key << '=' << cell_text(value) << '\n';
    }
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
        if (c) os << ',';
        os << csv_field(record.columns[c]);
    }
    os << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << csv_field(cell_text(row[c]));
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const OutputRecord& record) {
    nlohmann::ordered_json doc;
    doc["command"] = record.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters) params[key] = cell_json(value);
    doc["parameters"] = params;
    doc["columns"] = record.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[record.columns[c]] = cell_json(row[c]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    meta["version"] = record.metadata.version;
    if (record.metadata.seed) meta["seed"] = *record.metadata.seed;
    if (record.metadata.timestamp) meta["timestamp"] = *record.metadata.timestamp;
    doc["metadata"] = meta;
    os << doc.dump(2) << '\n';
}

void write_record(std::ostream& os, const OutputRecord& record, OutputFormat format) {
    if (format == OutputFormat::Json) {
        write_json(os, record);
    } else {
        write_csv(os, record);
    }
}

}  // namespace anchormoment
