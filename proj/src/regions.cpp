#include "stabsys/regions.hpp"

#include <array>

namespace stabsys {

bool in_PS(const ParamTriple& p) {
  return p.alpha >= 0 && p.beta >= 0 && p.gamma > 1;
}

namespace {

// Threshold of the beta > 1 branch: (beta^2 + 2 alpha beta - alpha)/(alpha(beta-1)).
Rational s_threshold_high(const Rational& alpha, const Rational& beta) {
  return (beta * beta + 2 * alpha * beta - alpha) / (alpha * (beta - 1));
}

// Threshold of the beta < 1 branch: 1 + beta(1 - alpha)/(2 alpha).
Rational s_threshold_low(const Rational& alpha, const Rational& beta) {
  return 1 + beta * (1 - alpha) / (2 * alpha);
}

}  // namespace

bool in_S(const ParamTriple& p) {
  if (!in_PS(p)) return false;
  if (p.beta == 0 || p.beta == 1) return false;
  if (p.alpha == 0)
    throw std::domain_error("in_S: threshold undefined for alpha = 0 with beta != 0");
  if (p.beta > 1) return p.gamma >= s_threshold_high(p.alpha, p.beta);
  return p.gamma > s_threshold_low(p.alpha, p.beta);
}

bool on_S_boundary(const ParamTriple& p) {
  if (!in_PS(p) || p.beta <= 1 || p.alpha == 0) return false;
  return p.gamma == s_threshold_high(p.alpha, p.beta);
}

BGCoefficients bg_solve(const Rational& alpha, const Rational& beta,
                        const Rational& gamma, const Rational& t) {
  if (alpha == 0 || beta == 0 || t == 0)
    throw std::domain_error("bg_solve: division by zero (alpha, beta, t must be nonzero)");

  BGCoefficients c;
  c.t = t;
  c.u = (t * beta * (alpha + 2) - alpha * (alpha + t + 1)) / (2 * t * beta);
  c.p = (alpha + 1 - c.u) / (alpha * alpha);
  c.A = (alpha - t * (beta + 1) - 1) / (2 * t * alpha);
  c.q = (2 * alpha * (gamma - 1) + beta * (alpha - t * (beta + 1) - 1)) / (2 * t * alpha);

  c.B = -c.p;
  c.C = c.p * alpha - 1;
  c.D = c.q - c.A * beta;
  c.E = c.A + c.p * beta;
  c.F = 1 + c.A * alpha - (c.p * alpha - 1) * beta;

  c.q_nonneg = c.q >= 0;
  c.u_ge_one = c.u >= 1;
  c.u_le_alpha_plus_one = c.u <= alpha + 1;
  c.p_nonneg = c.p >= 0;

  c.re_n = 1 + t * c.D;
  c.re_d = t * c.E;
  c.re_k = t * c.F;
  return c;
}

std::optional<TWindow> t_window(const Rational& alpha, const Rational& beta,
                                const Rational& gamma) {
  if (alpha <= 0 || beta <= 0)
    throw std::domain_error("t_window: alpha and beta must be positive");
  if (beta == 1)
    throw std::domain_error("t_window: beta = 1 admits no t (u >= 1 is precluded)");

  const Rational q_bound_num = 2 * alpha * (gamma - 1) + beta * (alpha - 1);
  const Rational q_bound = q_bound_num / (beta * (beta + 1));

  if (beta > 1) {
    const Rational lo = (alpha + 1) / (beta - 1);
    if (lo > q_bound) return std::nullopt;
    return TWindow{lo, q_bound, false};
  }
  // beta < 1: u >= 1 is unattainable; the admissible range is the open-below
  // interval (0, min((alpha+1)/(1-beta), q_bound)].
  if (q_bound_num <= 0) return std::nullopt;
  const Rational cap = (alpha + 1) / (1 - beta);
  return TWindow{Rational(0), cap < q_bound ? cap : q_bound, true};
}

Rational min_positive_im(const Rational& alpha, const Rational& beta) {
  if (alpha < 0) throw std::domain_error("min_positive_im: alpha must be nonnegative");
  const Int aa = numerator(alpha), ba = denominator(alpha);
  const Int ab = numerator(beta), bb = denominator(beta);
  // Values of d + alpha k - beta n have numerators in the subgroup of Z
  // generated by these three integers (over denominator ba*bb).
  Int g = gcd_nonneg(ba * bb, aa * bb);
  g = gcd_nonneg(g, ab * ba);
  return make_rational(g, ba * bb);
}

ParamValue ParamValue::parse(std::string_view text) {
  try {
    return ParamValue::rational(parse_rational(text));
  } catch (const std::invalid_argument&) {
    return ParamValue::marker(std::string(text));
  }
}

bool is_discrete_im(const ParamValue& alpha, const ParamValue& beta) {
  return alpha.is_rational() && beta.is_rational();
}

namespace {

// Solution set of a 3x2 rational system rows[i] . (x1, x2) = rhs[i]:
// inconsistent, a point, or a line (direction != 0). Rank-0 rows with
// nonzero rhs are inconsistent; a fully zero system is rejected upstream.
struct BlockSolution {
  bool consistent{false};
  Rational x1, x2;    // particular solution
  Rational v1, v2;    // direction of the solution line (zero for a point)
  bool is_line() const { return !(v1 == 0 && v2 == 0); }
};

BlockSolution solve_block(const std::array<Rational, 3>& a,
                          const std::array<Rational, 3>& b,
                          const std::array<Rational, 3>& r) {
  BlockSolution s;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Rational det = a[i] * b[j] - a[j] * b[i];
      if (det == 0) continue;
      s.x1 = (r[i] * b[j] - r[j] * b[i]) / det;
      s.x2 = (a[i] * r[j] - a[j] * r[i]) / det;
      for (int m = 0; m < 3; ++m)
        if (a[m] * s.x1 + b[m] * s.x2 != r[m]) return s;  // inconsistent
      s.consistent = true;
      return s;
    }
  }
  // Rank <= 1. Find a nonzero row and check proportionality of the rest.
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (!(a[i] == 0 && b[i] == 0)) pivot = i;
  if (pivot < 0) {
    for (int i = 0; i < 3; ++i)
      if (r[i] != 0) return s;
    throw std::domain_error("orbit_compare: charge has rank-deficient coefficient rows");
  }
  for (int i = 0; i < 3; ++i)
    if (a[i] * r[pivot] != a[pivot] * r[i] || b[i] * r[pivot] != b[pivot] * r[i]) return s;
  if (a[pivot] != 0) {
    s.x1 = r[pivot] / a[pivot];
    s.x2 = 0;
  } else {
    s.x1 = 0;
    s.x2 = r[pivot] / b[pivot];
  }
  s.v1 = -b[pivot];
  s.v2 = a[pivot];
  s.consistent = true;
  return s;
}

}  // namespace

OrbitVerdict orbit_compare(const ChargeFamily& source, const ChargeFamily& target) {
  const ChargeRows zs = source.rows();
  const ChargeRows zt = target.rows();

  // T o Z_target = Z_source on basis classes, split into the (a, b) row
  // (real part of the image) and the (c, d) row (imaginary part).
  const std::array<Rational, 3> re_t{zt.re_n, zt.re_d, zt.re_k};
  const std::array<Rational, 3> im_t{zt.im_n, zt.im_d, zt.im_k};
  const std::array<Rational, 3> re_s{zs.re_n, zs.re_d, zs.re_k};
  const std::array<Rational, 3> im_s{zs.im_n, zs.im_d, zs.im_k};

  const BlockSolution top = solve_block(re_t, im_t, re_s);
  const BlockSolution bot = solve_block(re_t, im_t, im_s);
  OrbitVerdict verdict;
  if (!top.consistent || !bot.consistent) return verdict;

  // det as a function of the free line parameters s (top) and u (bottom):
  // det(s, u) = C0 + C1 s + C2 u + C3 s u.
  const Rational C0 = top.x1 * bot.x2 - top.x2 * bot.x1;
  const Rational C1 = top.v1 * bot.x2 - top.v2 * bot.x1;
  const Rational C2 = top.x1 * bot.v2 - top.x2 * bot.v1;
  const Rational C3 = top.v1 * bot.v2 - top.v2 * bot.v1;

  Rational s(0), u(0);
  if (C1 == 0 && C2 == 0 && C3 == 0) {
    if (C0 <= 0) return verdict;
  } else if (C3 != 0) {
    if (C2 + C3 * s == 0) s = 1;  // at most one s kills the u-coefficient
    u = (1 - C0 - C1 * s) / (C2 + C3 * s);
  } else if (C1 != 0) {
    s = (1 - C0) / C1;
  } else {
    u = (1 - C0) / C2;
  }

  Matrix2 T{top.x1 + s * top.v1, top.x2 + s * top.v2,
            bot.x1 + u * bot.v1, bot.x2 + u * bot.v2};
  if (T.det() <= 0) return verdict;
  verdict.equivalent = true;
  verdict.witness = T;
  return verdict;
}

}  // namespace stabsys
