#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anchormoment/rational.hpp"

namespace anchormoment {

/// One table cell. Exact values travel as "p/q" strings; monostate renders
/// as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

enum class OutputFormat { Csv, Json };

struct OutputMetadata {
    std::string version;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> timestamp;  ///< ISO-8601 UTC; absent under --no-timestamp
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, Cell>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    OutputMetadata metadata;

    /// Appends a row; throws std::logic_error when its width differs from columns.
    void add_row(std::vector<Cell> row);
};

/// "≈" followed by the value to ten decimals: the companion of an exact cell.
std::string approx_text(double value);
std::string approx_text(const ExactRational& value);

/// Shortest text that parses back to the same double; "nan"/"inf"/"-inf" otherwise.
std::string format_double(double value);

std::string current_timestamp_utc();

void write_csv(std::ostream& os, const OutputRecord& record);
void write_json(std::ostream& os, const OutputRecord& record);
void write_record(std::ostream& os, const OutputRecord& record, OutputFormat format);

}  // namespace anchormoment
