#pragma once

#include "stabsys/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stabsys {

/// Grothendieck-group class of a (shifted) coherent system: generalized rank,
/// degree, and section-space dimension. Components may be negative; the class
/// of a shift satisfies [E[1]] = -[E].
struct ClassVector {
  Int n{0};
  Int d{0};
  Int k{0};

  ClassVector() = default;
  ClassVector(Int n_, Int d_, Int k_) : n(std::move(n_)), d(std::move(d_)), k(std::move(k_)) {}
  ClassVector(long long n_, long long d_, long long k_) : n(n_), d(d_), k(k_) {}

  bool is_zero() const { return n == 0 && d == 0 && k == 0; }

  friend ClassVector operator+(const ClassVector& a, const ClassVector& b) {
    return {a.n + b.n, a.d + b.d, a.k + b.k};
  }
  friend ClassVector operator-(const ClassVector& a, const ClassVector& b) {
    return {a.n - b.n, a.d - b.d, a.k - b.k};
  }
  friend ClassVector operator-(const ClassVector& a) { return {-a.n, -a.d, -a.k}; }
  friend ClassVector operator*(const Int& s, const ClassVector& a) {
    return {s * a.n, s * a.d, s * a.k};
  }
  friend bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.n == b.n && a.d == b.d && a.k == b.k;
  }
  friend bool operator!=(const ClassVector& a, const ClassVector& b) { return !(a == b); }

  /// Lexicographic (n, d, k) order; used for deterministic result merging.
  friend bool operator<(const ClassVector& a, const ClassVector& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.d != b.d) return a.d < b.d;
    return a.k < b.k;
  }
};

/// True iff the 3x2 matrix [a|b] has rank <= 1, i.e. all 2x2 minors vanish.
/// The zero vector is parallel to everything.
inline bool is_parallel(const ClassVector& a, const ClassVector& b) {
  return a.n * b.d - a.d * b.n == 0 && a.n * b.k - a.k * b.n == 0 &&
         a.d * b.k - a.k * b.d == 0;
}

inline std::string to_string(const ClassVector& c) {
  return c.n.str() + "," + c.d.str() + "," + c.k.str();
}

/// Parses "n,d,k" (components may be negative).
inline ClassVector parse_class(std::string_view text) {
  std::vector<Int> parts;
  std::size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) throw std::invalid_argument("class vector: empty component");
    try {
      parts.emplace_back(tok);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("class vector: bad component '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("class vector: expected n,d,k");
  return ClassVector{parts[0], parts[1], parts[2]};
}

/// Arithmetic genus of the base curve.
struct Genus {
  long long g{0};
  Genus() = default;
  explicit Genus(long long g_) : g(g_) {
    if (g < 0) throw std::domain_error("genus must be nonnegative");
  }
};

}  // namespace stabsys
