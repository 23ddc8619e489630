#pragma once

#include "stabsys/rational.hpp"

#include <string>

namespace stabsys {

enum class Ordering { Less, Equal, Greater };

/// A slope: either a finite exact rational or the single +infinity element
/// (which arises exactly when the imaginary part of the defining charge is
/// zero). Totally ordered with every finite value below infinity; there is
/// no -infinity.
class SlopeValue {
 public:
  SlopeValue() : finite_(true), value_(0) {}
  explicit SlopeValue(Rational v) : finite_(true), value_(std::move(v)) {}
  static SlopeValue infinity() {
    SlopeValue s;
    s.finite_ = false;
    return s;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  const Rational& value() const {
    if (!finite_) throw std::domain_error("slope: infinite value has no rational part");
    return value_;
  }

  friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const SlopeValue& a, const SlopeValue& b) { return !(a == b); }
  friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
    if (!a.finite_) return false;           // inf < x never
    if (!b.finite_) return true;            // finite < inf
    return a.value_ < b.value_;
  }
  friend bool operator<=(const SlopeValue& a, const SlopeValue& b) { return a < b || a == b; }
  friend bool operator>(const SlopeValue& a, const SlopeValue& b) { return b < a; }
  friend bool operator>=(const SlopeValue& a, const SlopeValue& b) { return b <= a; }

 private:
  bool finite_;
  Rational value_;
};

inline Ordering compare_slopes(const SlopeValue& a, const SlopeValue& b) {
  if (a < b) return Ordering::Less;
  if (b < a) return Ordering::Greater;
  return Ordering::Equal;
}

/// "p/q" for finite values, "inf" for infinity.
inline std::string to_string(const SlopeValue& s) {
  return s.is_finite() ? to_string(s.value()) : std::string("inf");
}

}  // namespace stabsys
