#ifndef CRITCURV_REPORT_HPP
#define CRITCURV_REPORT_HPP

// Tabular results and their three serializations. Field order is the column
// order; doubles carry 17 significant digits in json/csv and 10 in table mode.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace critcurv {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::invalid_argument when the row width differs from the header.
    void add_row(std::vector<Cell> row);
};

enum class Format { Json, Csv, Table };

Format parse_format(std::string_view name);

inline constexpr int full_digits = 17;
inline constexpr int table_digits = 10;

/// %.{digits}g; non-finite values become "nan", "inf" or "-inf".
std::string format_number(double v, int digits);

/// JSON: array of objects (non-finite doubles as null). CSV: header line then
/// rows. Table: space-aligned columns. Every format ends with a newline.
void emit_report(std::ostream& out, const Table& table, Format format);
std::string emit_report(const Table& table, Format format);

}  // namespace critcurv

#endif  // CRITCURV_REPORT_HPP
