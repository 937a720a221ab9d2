#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rklat {

/// Exact arbitrary-precision integer. All model counts are exact; nothing in
/// this library touches floating point.
using BigInt = boost::multiprecision::cpp_int;

/// base^exp for small bases.
BigInt ipow(unsigned base, unsigned exp);

/// Binomial coefficient n over r by the multiplicative formula; every
/// intermediate division is exact. Returns 0 when r > n.
BigInt binomial(unsigned n, unsigned r);

/// Parses a non-empty string of decimal digits into a non-negative integer.
/// Throws parse_error on anything else (signs and whitespace included).
BigInt parse_decimal(std::string_view text);

}  // namespace rklat
