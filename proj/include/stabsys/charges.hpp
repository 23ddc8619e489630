#pragma once

#include "stabsys/class_vector.hpp"
#include "stabsys/rational.hpp"
#include "stabsys/slope.hpp"

#include <string>

namespace stabsys {

/// Value of a central charge: exact rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
    return !(a == b);
  }
};

/// Coefficient rows of a charge as linear maps on (n, d, k); used by the
/// orbit solver, which works entry-wise on basis classes.
struct ChargeRows {
  Rational re_n, re_d, re_k;
  Rational im_n, im_d, im_k;
};

enum class ChargeKind { StandardAlpha, StandardAlphaBeta, Tilted, Dagger };

/// One of the charge families: Z_alpha, Z_alpha^beta, the tilted charge, or
/// the BG-deformed dagger charge (whose real row is supplied explicitly).
class ChargeFamily {
 public:
  static ChargeFamily standard_alpha(Rational alpha);
  static ChargeFamily standard_alpha_beta(Rational alpha, Rational beta);
  static ChargeFamily tilted(Rational alpha, Rational beta, Rational gamma);
  static ChargeFamily dagger(Rational alpha, Rational beta, Rational t,
                             Rational re_n, Rational re_d, Rational re_k);

  ChargeKind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& t() const { return t_; }

  ComplexRational evaluate(const ClassVector& c) const;
  ChargeRows rows() const;
  std::string describe() const;

 private:
  ChargeFamily() = default;
  ChargeKind kind_{ChargeKind::StandardAlpha};
  Rational alpha_, beta_, gamma_, t_;
  Rational re_n_, re_d_, re_k_;  // dagger real row
};

/// Z_alpha = -(d + alpha k) + i n. Requires alpha >= 0.
ComplexRational z_alpha(const ClassVector& c, const Rational& alpha);

/// Z_alpha^beta = Z_alpha + n beta; beta = 0 recovers z_alpha bitwise.
ComplexRational z_alpha_beta(const ClassVector& c, const Rational& alpha,
                             const Rational& beta);

/// Tilted charge (d + gamma n - k) + i (d + alpha k - beta n). Additive on
/// two-term complexes, so applying it to a signed total class equals the
/// difference of the charges of the parts.
ComplexRational z_tilt(const ClassVector& c, const Rational& alpha,
                       const Rational& beta, const Rational& gamma);

/// Slope -re/im, or infinity when im = 0.
SlopeValue slope(const ComplexRational& z);

/// mu_alpha = (d + alpha k)/n, infinity when n = 0.
SlopeValue mu_alpha(const ClassVector& c, const Rational& alpha);

/// Slope of the tilted charge.
SlopeValue mu_tilt(const ClassVector& c, const Rational& alpha,
                   const Rational& beta, const Rational& gamma);

/// Display-only phase arg(z)/pi. Never used in ordering decisions; all
/// comparisons go through exact cross-multiplication. Rejects z = 0.
double phase_display(const ComplexRational& z);

}  // namespace stabsys
