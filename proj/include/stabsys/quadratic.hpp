#pragma once

#include "stabsys/charges.hpp"
#include "stabsys/class_vector.hpp"
#include "stabsys/rational.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace stabsys {

/// Linear form on (n, d, k) with exact rational coefficients.
struct LinearForm3 {
  Rational cn, cd, ck;

  Rational eval(const ClassVector& c) const { return cn * c.n + cd * c.d + ck * c.k; }

  friend bool operator==(const LinearForm3& a, const LinearForm3& b) {
    return a.cn == b.cn && a.cd == b.cd && a.ck == b.ck;
  }
};

/// Symmetric 3x3 rational form acting on (n, d, k); evaluation is exact.
class QuadraticForm3 {
 public:
  QuadraticForm3() { m_.fill(Rational(0)); }

  /// Entries indexed 0=n, 1=d, 2=k; setting (i,j) also sets (j,i).
  void set(int i, int j, Rational v);
  const Rational& at(int i, int j) const { return m_[idx(i, j)]; }

  Rational eval(const ClassVector& c) const;

  /// Symmetrized product of two linear forms: x -> L1(x) * L2(x).
  static QuadraticForm3 from_linear_product(const LinearForm3& l1, const LinearForm3& l2);

  friend QuadraticForm3 operator+(const QuadraticForm3& a, const QuadraticForm3& b);
  friend QuadraticForm3 operator-(const QuadraticForm3& a, const QuadraticForm3& b);
  friend QuadraticForm3 operator*(const Rational& s, const QuadraticForm3& a);
  friend bool operator==(const QuadraticForm3& a, const QuadraticForm3& b) {
    return a.m_ == b.m_;
  }

  bool is_zero() const;

 private:
  static int idx(int i, int j) { return i * 3 + j; }
  std::array<Rational, 9> m_;
};

/// Support-property form Q_alpha; two branches meeting at alpha = 1 (both
/// reduce to 2dk there). Requires alpha > 0.
Rational q_alpha(const ClassVector& c, const Rational& alpha);

/// Q_alpha as an explicit symmetric matrix.
QuadraticForm3 q_alpha_form(const Rational& alpha);

/// BG discriminant k(d+n-k) + p d^2 + q n^2 + u k^2. Requires p, q >= 0 and
/// u >= 1.
Rational delta(const ClassVector& c, const Rational& p, const Rational& q,
               const Rational& u);

/// Discriminant as a quadratic form (no positivity constraints checked).
QuadraticForm3 delta_form(const Rational& p, const Rational& q, const Rational& u);

/// Linear factors of the discriminant: Delta = Re(Z_alpha^beta) * Delta_R +
/// Im(Z_alpha^beta) * Delta_I. The coefficient A is the remaining free
/// parameter of the six-equation system; (p, u, alpha) must satisfy the
/// compatibility constraint p = (alpha + 1 - u)/alpha^2 or there is no
/// solution.
std::pair<LinearForm3, LinearForm3> delta_forms(const Rational& alpha,
                                                const Rational& beta,
                                                const Rational& p, const Rational& q,
                                                const Rational& u, const Rational& A);

/// Q^dagger_{r,t} = r * base + t * disc evaluated at c. Requires r, t > 0.
Rational q_dagger(const ClassVector& c, const Rational& r, const Rational& t,
                  const QuadraticForm3& base, const QuadraticForm3& disc);

struct SupportViolation {
  ClassVector cls;
  std::string check;  // "q_alpha_nonneg" | "kernel_negative" | "ratio"
};

/// Result of an exhaustive support-property scan over a lattice box.
struct SupportCertificate {
  Rational alpha;
  Rational beta;
  long long bound{0};
  unsigned long long checked{0};
  std::vector<SupportViolation> violations;  // lexicographic class order
  std::optional<Rational> ratio_min;         // min of |Z_alpha|^2 / ||c||^2
  bool pass() const { return violations.empty(); }
};

/// Scans every admissible class in |n|,|d|,|k| <= bound for q_alpha >= 0 and
/// for the ratio bound |Z_alpha(c)|^2 / ||c||^2 >= min(alpha^2, 1), and every
/// nonzero integer kernel class (n = 0, d = -alpha k) for q_alpha < 0.
/// Failures are listed with witnesses rather than thrown.
SupportCertificate support_certificate(const Rational& alpha, const Rational& beta,
                                       long long bound, int workers = 0);

}  // namespace stabsys
