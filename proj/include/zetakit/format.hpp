#pragma once

#include <string>

namespace zetakit {

/// Shortest decimal that parses back to the same double.
std::string shortest_decimal(double x);

/// Shortest round-trip decimal, padded to at least `digits` significant digits.
std::string decimal_min_digits(double x, int digits);

}  // namespace zetakit
