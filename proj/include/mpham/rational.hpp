#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "mpham/errors.hpp"

// Under C++20 rewritten comparisons, boost's mixed `rational == integer`
// template resolves back to itself and recurses. Exact non-template overloads
// win overload resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace mpham {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

// Parses "0.05", "1", "-2.5", ".25" exactly; the denominator is a power of ten.
inline Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw InvalidArguments("empty decimal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) throw InvalidArguments("malformed decimal '" + std::string(text) + "'");
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw InvalidArguments("malformed decimal '" + std::string(text) + "'");
    seen_digit = true;
    if (num > (INT64_MAX - 9) / 10 || (seen_point && den > INT64_MAX / 10))
      throw InvalidArguments("decimal '" + std::string(text) + "' has too many digits");
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) throw InvalidArguments("malformed decimal '" + std::string(text) + "'");
  return Rational(negative ? -num : num, den);
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mpham
