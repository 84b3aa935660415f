#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace satfarey {

// Locale-free formatting for report output: '.' decimal point, 12 significant
// digits, "nan"/"inf" spelled lowercase.
inline std::string csv_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline std::string csv_int(int64_t v) { return std::to_string(v); }

} // namespace satfarey
