#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nlspec::cli {

using Cell = std::variant<long, double, std::string>;

struct SummaryLine {
    std::string key;
    std::vector<std::pair<std::string, Cell>> fields;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<SummaryLine> summary;
};

/// CSV with a header row; doubles in shortest round-trip form; summary lines prefixed by '#'.
void write_csv(std::ostream& os, const Table& t);
/// {"columns": [...], "rows": [[...], ...], "summary": [...]}
void write_json(std::ostream& os, const Table& t);

std::string format_double(double v);

} // namespace nlspec::cli
