#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ultraforest {

/// Exact distance value. boost::rational keeps it reduced with a positive
/// denominator, and its comparison operators never overflow.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or a decimal literal such as "-1.25". Throws
/// Error(ParseError) on malformed text, a zero denominator, or a value whose
/// reduced numerator or denominator does not fit in 64 bits.
Rational parse_rational(std::string_view text);

/// Always "p/q", even for integers. Used in canonical codes and tree labels.
std::string to_fraction_string(const Rational& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

struct RationalHash {
  std::size_t operator()(const Rational& value) const noexcept {
    auto h = std::hash<std::int64_t>{}(value.numerator());
    return h ^ (std::hash<std::int64_t>{}(value.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

}  // namespace ultraforest
