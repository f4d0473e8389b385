#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibprod {

// Arbitrary-precision non-negative integer: the positions/exponents m.
using natural = boost::multiprecision::cpp_int;

// Exact rational, used for zero-coefficient densities.
using rational = boost::multiprecision::cpp_rational;

// Interval indices k, n. locate(m) grows like 4.78 * digits10(m), so a
// machine word covers any m that could ever be queried.
using index_t = std::int64_t;

// Strict decimal parser: digits only, any length.
inline natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_natural: empty string");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("parse_natural: not a non-negative decimal integer: \"" +
                                  std::string(text) + "\"");
    }
  }
  return natural(std::string(text));
}

inline std::int64_t to_int64(const natural& v) {
  if (v < 0 || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("to_int64: value does not fit a 64-bit integer");
  return v.convert_to<std::int64_t>();
}

}  // namespace fibprod
