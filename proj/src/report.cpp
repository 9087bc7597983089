#include "critcurv/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace critcurv {

namespace {

std::string json_escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(ch)));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    out += '"';
    return out;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c, int digits)
{
    return std::visit(
        [digits](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v, digits);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else {
                return v;
            }
        },
        c);
}

std::string cell_json(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c); d != nullptr && !std::isfinite(*d)) return "null";
    if (const auto* s = std::get_if<std::string>(&c)) return json_escape(*s);
    return cell_text(c, full_digits);
}

void emit_json(std::ostream& out, const Table& t)
{
    if (t.rows.empty()) {
        out << "[]\n";
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << "  {";
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            if (j > 0) out << ", ";
            out << json_escape(t.columns[j]) << ": " << cell_json(t.rows[i][j]);
        }
        out << (i + 1 < t.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
}

void emit_csv(std::ostream& out, const Table& t)
{
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        out << (j > 0 ? "," : "") << csv_escape(t.columns[j]);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j > 0 ? "," : "") << csv_escape(cell_text(row[j], full_digits));
        }
        out << '\n';
    }
}

void emit_table(std::ostream& out, const Table& t)
{
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width;
    for (const auto& c : t.columns) width.push_back(c.size());
    for (const auto& row : t.rows) {
        auto& line = text.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
            line.push_back(cell_text(row[j], table_digits));
            width[j] = std::max(width[j], line.back().size());
        }
    }
    const auto put = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) line += "  ";
            line += cells[j];
            if (j + 1 < cells.size()) line.append(width[j] - cells[j].size(), ' ');
        }
        out << line << '\n';
    };
    put(t.columns);
    for (const auto& line : text) put(line);
}

}  // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

Format parse_format(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "json") return Format::Json;
    if (lower == "csv") return Format::Csv;
    if (lower == "table") return Format::Table;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_number(double v, int digits)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void emit_report(std::ostream& out, const Table& table, Format format)
{
    switch (format) {
    case Format::Json: emit_json(out, table); return;
    case Format::Csv: emit_csv(out, table); return;
    case Format::Table: emit_table(out, table); return;
    }
}

std::string emit_report(const Table& table, Format format)
{
    std::ostringstream os;
    emit_report(os, table, format);
    return os.str();
}

}  // namespace critcurv
