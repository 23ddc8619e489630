#pragma once

#include "stabsys/charges.hpp"
#include "stabsys/quadratic.hpp"
#include "stabsys/rational.hpp"

#include <optional>
#include <string>

namespace stabsys {

struct ParamTriple {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

/// PS = { alpha >= 0, beta >= 0, gamma > 1 }.
bool in_PS(const ParamTriple& p);

/// S-membership: PS, beta not in {0, 1}, and the case threshold
///   gamma >= (beta^2 + 2 alpha beta - alpha)/(alpha (beta - 1))  for beta > 1
///   gamma >  1 + beta (1 - alpha)/(2 alpha)                      for beta < 1.
/// alpha = 0 with beta != 0 leaves the thresholds undefined and is an error.
bool in_S(const ParamTriple& p);

/// True iff the parameters sit exactly on the (non-strict) beta > 1 boundary.
bool on_S_boundary(const ParamTriple& p);

/// Coefficients of the BG-deformed charge, solved from the six-equation
/// linear system. Validity flags record the window q >= 0, 1 <= u <= alpha+1,
/// p >= 0, t > 0; the reconstruction rows are reported so callers can verify
/// Re = gamma n + d - k coefficient-wise.
struct BGCoefficients {
  Rational p, q, u, A, B, C, D, E, F;
  Rational t;
  bool q_nonneg{false};
  bool u_ge_one{false};
  bool u_le_alpha_plus_one{false};
  bool p_nonneg{false};
  // Real-part coefficient rows of (Z_alpha^beta)^dagger_t on (n, d, k).
  Rational re_n, re_d, re_k;
  bool all_valid() const { return q_nonneg && u_ge_one && u_le_alpha_plus_one && p_nonneg; }
};

/// Solves u, p, A, q (and the dependent B..F) for the given parameters.
/// Requires alpha, beta, t nonzero (division by zero otherwise).
BGCoefficients bg_solve(const Rational& alpha, const Rational& beta,
                        const Rational& gamma, const Rational& t);

/// Rational t-interval. lo_open marks the beta < 1 window (0, hi]; the
/// beta > 1 window is closed on both ends.
struct TWindow {
  Rational lo;
  Rational hi;
  bool lo_open{false};
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& t) const {
    return (lo_open ? t > lo : t >= lo) && t <= hi;
  }
};

/// Admissible t-values for the BG solver: t(beta-1) >= alpha+1 together with
/// the q >= 0 bound. Empty exactly when in_S fails (up to the strict
/// boundary of the beta < 1 case). beta = 1 admits no t and is an error.
std::optional<TWindow> t_window(const Rational& alpha, const Rational& beta,
                                const Rational& gamma);

/// Minimum positive value of d + alpha k - beta n over integer classes:
/// g / (b_alpha b_beta) with g = gcd(b_alpha b_beta, a_alpha b_beta,
/// a_beta b_alpha).
Rational min_positive_im(const Rational& alpha, const Rational& beta);

/// A parameter that is either an exact rational or an irrational marker
/// (e.g. "sqrt2"); the library computes only with rationals, so markers
/// exist to make the discreteness contract testable.
class ParamValue {
 public:
  static ParamValue rational(Rational v) {
    ParamValue p;
    p.rational_ = std::move(v);
    return p;
  }
  static ParamValue marker(std::string name) {
    ParamValue p;
    p.marker_ = std::move(name);
    return p;
  }
  static ParamValue parse(std::string_view text);

  bool is_rational() const { return rational_.has_value(); }
  const Rational& value() const { return *rational_; }
  const std::string& marker_name() const { return marker_; }

 private:
  std::optional<Rational> rational_;
  std::string marker_;
};

/// Im(Z_alpha^{beta,gamma}) has discrete image iff both parameters are
/// rational.
bool is_discrete_im(const ParamValue& alpha, const ParamValue& beta);

struct Matrix2 {
  Rational a, b, c, d;
  Rational det() const { return a * d - b * c; }
};

/// Orbit-comparison verdict. The witness T satisfies T o Z_target = Z_source
/// entry-wise on the basis classes (the group-action convention, matching
/// the upper-triangular shear [[1, beta - beta']] relating two standard
/// charges), and has positive determinant.
struct OrbitVerdict {
  bool equivalent{false};
  std::optional<Matrix2> witness;
};

/// Decides GL+(2, Q)-equivalence of two charge families by solving the
/// six-equation linear system entry-wise on (1,0,0), (0,1,0), (0,0,1).
OrbitVerdict orbit_compare(const ChargeFamily& source, const ChargeFamily& target);

}  // namespace stabsys
