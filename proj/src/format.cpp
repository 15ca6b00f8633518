#include "zetakit/format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace zetakit {

namespace {

int significant_digits(const std::string& s) {
    int count = 0;
    bool leading = true;
    for (char c : s) {
        if (c == 'e' || c == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(c))) continue;
        if (leading && c == '0') continue;
        leading = false;
        ++count;
    }
    return count;
}

}  // namespace

std::string shortest_decimal(double x) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

std::string decimal_min_digits(double x, int digits) {
    std::string s = shortest_decimal(x);
    if (!std::isfinite(x) || x == 0.0 || significant_digits(s) >= digits) return s;
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    std::array<char, 64> buf{};
    const bool fixed = exponent >= -4 && exponent < digits;
    const auto [end, ec] =
        fixed ? std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed,
                              digits - 1 - exponent)
              : std::to_chars(buf.data(), buf.data() + buf.size(), x,
                              std::chars_format::scientific, digits - 1);
    if (ec != std::errc()) return s;
    return std::string(buf.data(), end);
}

}  // namespace zetakit
