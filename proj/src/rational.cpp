#include "ultraforest/rational.hpp"

#include "ultraforest/error.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace ultraforest {
namespace {

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw Error(Errc::ParseError, "invalid rational '" + std::string(text) + "': " + std::string(why),
              {std::string(text)});
}

std::int64_t parse_digits(std::string_view whole, std::string_view digits) {
  if (digits.empty()) fail(whole, "missing digits");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) fail(whole, "out of 64-bit range");
  if (ec != std::errc() || ptr != digits.data() + digits.size()) fail(whole, "unexpected character");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) fail(raw, "empty");
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.front() == '-' || body.front() == '+') fail(raw, "missing digits");

  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_digits(raw, body.substr(0, slash));
    den = parse_digits(raw, body.substr(slash + 1));
    if (den == 0) fail(raw, "zero denominator");
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    // Drop trailing zeros so "1.50000000000000000000" still fits.
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
    if (int_part.empty() && frac_part.empty()) fail(raw, "missing digits");
    std::int64_t whole = int_part.empty() ? 0 : parse_digits(raw, int_part);
    if (frac_part.size() > 18) fail(raw, "too many decimal places");
    std::int64_t frac = frac_part.empty() ? 0 : parse_digits(raw, frac_part);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t g = std::gcd(frac, scale);
    frac /= g;
    scale /= g;
    __int128 wide = static_cast<__int128>(whole) * scale + frac;
    if (wide > std::numeric_limits<std::int64_t>::max()) fail(raw, "out of 64-bit range");
    num = static_cast<std::int64_t>(wide);
    den = scale;
  } else {
    num = parse_digits(raw, body);
  }
  return Rational(negative ? -num : num, den);
}

std::string to_fraction_string(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return to_fraction_string(value);
}

}  // namespace ultraforest
