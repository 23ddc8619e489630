#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabsys {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// all arithmetic is exact. No floating-point value ever enters a predicate.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Serializes as "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(text)));
    }
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  }
}

inline Int gcd_nonneg(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

}  // namespace stabsys
