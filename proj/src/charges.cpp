#include "stabsys/charges.hpp"

#include <cmath>

namespace stabsys {

namespace {

void require_alpha_nonnegative(const Rational& alpha) {
  if (alpha < 0) throw std::domain_error("charge: alpha must be nonnegative");
}

}  // namespace

ComplexRational z_alpha(const ClassVector& c, const Rational& alpha) {
  require_alpha_nonnegative(alpha);
  return {-(Rational(c.d) + alpha * c.k), Rational(c.n)};
}

ComplexRational z_alpha_beta(const ClassVector& c, const Rational& alpha,
                             const Rational& beta) {
  require_alpha_nonnegative(alpha);
  return {-(Rational(c.d) + alpha * c.k - beta * c.n), Rational(c.n)};
}

ComplexRational z_tilt(const ClassVector& c, const Rational& alpha,
                       const Rational& beta, const Rational& gamma) {
  require_alpha_nonnegative(alpha);
  return {Rational(c.d) + gamma * c.n - c.k,
          Rational(c.d) + alpha * c.k - beta * c.n};
}

SlopeValue slope(const ComplexRational& z) {
  if (z.im == 0) return SlopeValue::infinity();
  return SlopeValue(-z.re / z.im);
}

SlopeValue mu_alpha(const ClassVector& c, const Rational& alpha) {
  return slope(z_alpha(c, alpha));
}

SlopeValue mu_tilt(const ClassVector& c, const Rational& alpha,
                   const Rational& beta, const Rational& gamma) {
  return slope(z_tilt(c, alpha, beta, gamma));
}

double phase_display(const ComplexRational& z) {
  if (z.is_zero()) throw std::domain_error("phase: zero charge has no phase");
  const double re = z.re.convert_to<double>();
  const double im = z.im.convert_to<double>();
  return std::atan2(im, re) / 3.14159265358979323846;
}

ChargeFamily ChargeFamily::standard_alpha(Rational alpha) {
  require_alpha_nonnegative(alpha);
  ChargeFamily f;
  f.kind_ = ChargeKind::StandardAlpha;
  f.alpha_ = std::move(alpha);
  return f;
}

ChargeFamily ChargeFamily::standard_alpha_beta(Rational alpha, Rational beta) {
  require_alpha_nonnegative(alpha);
  ChargeFamily f;
  f.kind_ = ChargeKind::StandardAlphaBeta;
  f.alpha_ = std::move(alpha);
  f.beta_ = std::move(beta);
  return f;
}

ChargeFamily ChargeFamily::tilted(Rational alpha, Rational beta, Rational gamma) {
  require_alpha_nonnegative(alpha);
  ChargeFamily f;
  f.kind_ = ChargeKind::Tilted;
  f.alpha_ = std::move(alpha);
  f.beta_ = std::move(beta);
  f.gamma_ = std::move(gamma);
  return f;
}

ChargeFamily ChargeFamily::dagger(Rational alpha, Rational beta, Rational t,
                                  Rational re_n, Rational re_d, Rational re_k) {
  require_alpha_nonnegative(alpha);
  if (t <= 0) throw std::domain_error("dagger charge: t must be positive");
  ChargeFamily f;
  f.kind_ = ChargeKind::Dagger;
  f.alpha_ = std::move(alpha);
  f.beta_ = std::move(beta);
  f.t_ = std::move(t);
  f.re_n_ = std::move(re_n);
  f.re_d_ = std::move(re_d);
  f.re_k_ = std::move(re_k);
  return f;
}

ComplexRational ChargeFamily::evaluate(const ClassVector& c) const {
  switch (kind_) {
    case ChargeKind::StandardAlpha:
      return z_alpha(c, alpha_);
    case ChargeKind::StandardAlphaBeta:
      return z_alpha_beta(c, alpha_, beta_);
    case ChargeKind::Tilted:
      return z_tilt(c, alpha_, beta_, gamma_);
    case ChargeKind::Dagger:
      return {re_n_ * c.n + re_d_ * c.d + re_k_ * c.k,
              Rational(c.d) + alpha_ * c.k - beta_ * c.n};
  }
  throw std::logic_error("charge family: unknown kind");
}

ChargeRows ChargeFamily::rows() const {
  ChargeRows r;
  const ClassVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  const ComplexRational z1 = evaluate(e1), z2 = evaluate(e2), z3 = evaluate(e3);
  r.re_n = z1.re;
  r.re_d = z2.re;
  r.re_k = z3.re;
  r.im_n = z1.im;
  r.im_d = z2.im;
  r.im_k = z3.im;
  return r;
}

std::string ChargeFamily::describe() const {
  switch (kind_) {
    case ChargeKind::StandardAlpha:
      return "standard:" + to_string(alpha_);
    case ChargeKind::StandardAlphaBeta:
      return "standard:" + to_string(alpha_) + "," + to_string(beta_);
    case ChargeKind::Tilted:
      return "tilted:" + to_string(alpha_) + "," + to_string(beta_) + "," + to_string(gamma_);
    case ChargeKind::Dagger:
      return "dagger:" + to_string(alpha_) + "," + to_string(beta_) + ",t=" + to_string(t_);
  }
  return "?";
}

}  // namespace stabsys
