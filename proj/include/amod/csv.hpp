#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace amod {

/// Locale-independent numeric formatting for CSV output: decimal notation,
/// 6 significant digits, dot separator.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline std::string format_number(std::int64_t v) { return std::to_string(v); }
inline std::string format_number(int v) { return std::to_string(v); }

} // namespace amod
