#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace hksum {

/// Shortest decimal form with `digits` significant digits ("%.*g").
inline std::string format_sig(double value, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

// CSV per the output contract: comma separator, '.' decimal point, LF line
// endings, header row first, 12 significant digits.
inline void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

inline void csv_values(std::ostream& os, const std::vector<double>& values, int digits = 12) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_sig(values[i], digits);
    }
    os << '\n';
}

}  // namespace hksum
