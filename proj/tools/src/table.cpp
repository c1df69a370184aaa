#include "nlspec_cli/table.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace nlspec::cli {

namespace {

void write_cell(std::ostream& os, const Cell& c)
{
    if (auto* l = std::get_if<long>(&c))
        os << *l;
    else if (auto* d = std::get_if<double>(&c))
        os << format_double(*d);
    else
        os << std::get<std::string>(c);
}

nlohmann::ordered_json to_json(const Cell& c)
{
    if (auto* l = std::get_if<long>(&c))
        return *l;
    if (auto* d = std::get_if<double>(&c))
        return *d;
    return std::get<std::string>(c);
}

} // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_csv(std::ostream& os, const Table& t)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            write_cell(os, row[i]);
        }
        os << '\n';
    }
    for (const auto& s : t.summary) {
        os << "# " << s.key;
        for (const auto& [k, v] : s.fields) {
            os << ' ' << k << '=';
            write_cell(os, v);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t)
{
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row)
            r.push_back(to_json(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    auto summary = nlohmann::ordered_json::array();
    for (const auto& s : t.summary) {
        nlohmann::ordered_json e;
        e["key"] = s.key;
        for (const auto& [k, v] : s.fields)
            e[k] = to_json(v);
        summary.push_back(std::move(e));
    }
    j["summary"] = std::move(summary);
    os << j.dump(1) << '\n';
}

} // namespace nlspec::cli
