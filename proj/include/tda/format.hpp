#pragma once

#include <charconv>
#include <string>

namespace tda {

// Shortest decimal form that parses back to the same double ("0.05", "inf",
// "1.4142135623730951"). All file and stdout emission goes through this so
// reruns are byte-identical.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace tda
