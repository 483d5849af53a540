#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace pbrs::detail {

/// Shortest round-trip decimal form of a double; locale-independent.
inline std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

inline double parse_double(const std::string& text, const char* field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(field) + ": cannot parse number '" + text + "'");
    return value;
}

}  // namespace pbrs::detail
