#ifndef POLYCHAIN_RATIONAL_HPP
#define POLYCHAIN_RATIONAL_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace polychain {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual input (link strings, rationals, index documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "[+-]digits[/digits]". The result is normalized (lowest terms,
/// positive denominator).
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

/// Exact rendering: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Approximate rendering with exactly `digits` significant digits
/// (trailing zeros kept).
inline std::string to_decimal(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
  return buf;
}

/// Shortest-round-trip-safe rendering of a binary float.
inline std::string to_float_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_decimal(const Rational& r, int digits = 10) {
  return to_decimal(r.convert_to<double>(), digits);
}

inline BigInt floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline BigInt ceil(const Rational& r) { return -floor(-r); }

}  // namespace polychain

#endif  // POLYCHAIN_RATIONAL_HPP
