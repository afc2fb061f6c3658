#pragma once

#include <charconv>
#include <string>

namespace loev {

// Shortest round-trip decimal form. Keeps report output deterministic.
inline std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace loev
