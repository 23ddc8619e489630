#include "stabsys/quadratic.hpp"

#include "stabsys/bounds.hpp"
#include "stabsys/parallel.hpp"

#include <algorithm>
#include <mutex>

namespace stabsys {

void QuadraticForm3::set(int i, int j, Rational v) {
  m_[idx(j, i)] = v;
  m_[idx(i, j)] = std::move(v);
}

Rational QuadraticForm3::eval(const ClassVector& c) const {
  const Rational x[3] = {Rational(c.n), Rational(c.d), Rational(c.k)};
  Rational acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += m_[idx(i, j)] * x[i] * x[j];
  return acc;
}

QuadraticForm3 QuadraticForm3::from_linear_product(const LinearForm3& l1,
                                                   const LinearForm3& l2) {
  const Rational a[3] = {l1.cn, l1.cd, l1.ck};
  const Rational b[3] = {l2.cn, l2.cd, l2.ck};
  QuadraticForm3 q;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) q.set(i, j, (a[i] * b[j] + a[j] * b[i]) / 2);
  return q;
}

QuadraticForm3 operator+(const QuadraticForm3& a, const QuadraticForm3& b) {
  QuadraticForm3 r;
  for (int i = 0; i < 9; ++i) r.m_[i] = a.m_[i] + b.m_[i];
  return r;
}

QuadraticForm3 operator-(const QuadraticForm3& a, const QuadraticForm3& b) {
  QuadraticForm3 r;
  for (int i = 0; i < 9; ++i) r.m_[i] = a.m_[i] - b.m_[i];
  return r;
}

QuadraticForm3 operator*(const Rational& s, const QuadraticForm3& a) {
  QuadraticForm3 r;
  for (int i = 0; i < 9; ++i) r.m_[i] = s * a.m_[i];
  return r;
}

bool QuadraticForm3::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Rational& v) { return v == 0; });
}

Rational q_alpha(const ClassVector& c, const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("q_alpha: alpha must be positive");
  const Rational n(c.n), d(c.d), k(c.k);
  if (alpha <= 1) {
    return ((1 - alpha * alpha) * (n * n + d * d) + 2 * alpha * d * k) /
           (alpha * alpha);
  }
  return (alpha * alpha - 1) * k * k + 2 * alpha * d * k;
}

QuadraticForm3 q_alpha_form(const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("q_alpha: alpha must be positive");
  QuadraticForm3 q;
  if (alpha <= 1) {
    const Rational a2 = alpha * alpha;
    q.set(0, 0, (1 - a2) / a2);
    q.set(1, 1, (1 - a2) / a2);
    q.set(1, 2, 1 / alpha);
  } else {
    q.set(2, 2, alpha * alpha - 1);
    q.set(1, 2, alpha);
  }
  return q;
}

Rational delta(const ClassVector& c, const Rational& p, const Rational& q,
               const Rational& u) {
  if (p < 0 || q < 0) throw std::domain_error("delta: p and q must be nonnegative");
  if (u < 1) throw std::domain_error("delta: u must be at least 1");
  const Rational n(c.n), d(c.d), k(c.k);
  return k * (d + n - k) + p * d * d + q * n * n + u * k * k;
}

QuadraticForm3 delta_form(const Rational& p, const Rational& q, const Rational& u) {
  QuadraticForm3 f;
  f.set(0, 0, q);
  f.set(1, 1, p);
  f.set(2, 2, u - 1);
  f.set(0, 2, Rational(1, 2));
  f.set(1, 2, Rational(1, 2));
  return f;
}

std::pair<LinearForm3, LinearForm3> delta_forms(const Rational& alpha,
                                                const Rational& beta,
                                                const Rational& p, const Rational& q,
                                                const Rational& u, const Rational& A) {
  if (alpha == 0) throw std::domain_error("delta_forms: alpha must be nonzero");
  if (p * alpha * alpha != alpha + 1 - u)
    throw std::domain_error(
        "delta_forms: incompatible (p, u, alpha); need p = (alpha+1-u)/alpha^2");
  const Rational B = -p;
  const Rational C = p * alpha - 1;
  const Rational D = q - A * beta;
  const Rational E = A + p * beta;
  const Rational F = 1 + A * alpha - (p * alpha - 1) * beta;
  LinearForm3 delta_r{A, B, C};
  LinearForm3 delta_i{D, E, F};
  return {delta_r, delta_i};
}

Rational q_dagger(const ClassVector& c, const Rational& r, const Rational& t,
                  const QuadraticForm3& base, const QuadraticForm3& disc) {
  if (r <= 0 || t <= 0) throw std::domain_error("q_dagger: r and t must be positive");
  return r * base.eval(c) + t * disc.eval(c);
}

SupportCertificate support_certificate(const Rational& alpha, const Rational& beta,
                                       long long bound, int workers) {
  if (alpha <= 0) throw std::domain_error("support certificate: alpha must be positive");
  if (bound < 1) throw std::domain_error("support certificate: bound must be >= 1");

  SupportCertificate cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.bound = bound;

  const Rational ratio_floor = alpha < 1 ? alpha * alpha : Rational(1);
  const int nworkers = worker_count(workers);

  struct SliceResult {
    unsigned long long checked{0};
    std::vector<SupportViolation> violations;
    std::optional<Rational> ratio_min;
  };
  std::vector<SliceResult> slices(nworkers);

  // Admissible classes have n, k >= 0; the box over d still runs negative.
  parallel_slices(0, bound + 1, nworkers, [&](long long n_lo, long long n_hi, long long w) {
    SliceResult& out = slices[static_cast<std::size_t>(w)];
    for (long long n = n_lo; n < n_hi; ++n) {
      for (long long d = -bound; d <= bound; ++d) {
        for (long long k = 0; k <= bound; ++k) {
          const ClassVector c{n, d, k};
          if (c.is_zero()) continue;
          if (!admissible_semistable(c, alpha)) continue;
          ++out.checked;
          if (q_alpha(c, alpha) < 0)
            out.violations.push_back({c, "q_alpha_nonneg"});
          // |Z_alpha|^2 / ||c||^2 >= min(alpha^2, 1), cross-multiplied.
          const Rational dak = Rational(d) + alpha * k;
          const Rational znorm = dak * dak + Rational(n) * n;
          const Rational cnorm = Rational(n) * n + Rational(d) * d + Rational(k) * k;
          if (znorm < ratio_floor * cnorm) out.violations.push_back({c, "ratio"});
          const Rational ratio = znorm / cnorm;
          if (!out.ratio_min || ratio < *out.ratio_min) out.ratio_min = ratio;
        }
      }
    }
  });

  for (auto& s : slices) {
    cert.checked += s.checked;
    cert.violations.insert(cert.violations.end(), s.violations.begin(), s.violations.end());
    if (s.ratio_min && (!cert.ratio_min || *s.ratio_min < *cert.ratio_min))
      cert.ratio_min = s.ratio_min;
  }

  // Kernel of Z_alpha^beta: n = 0, d = -alpha k. Integer points are
  // m * (0, -a, b) for alpha = a/b in lowest terms.
  const Int a = numerator(alpha);
  const Int b = denominator(alpha);
  for (Int m(1);; ++m) {
    if (a * m > bound || b * m > bound) break;
    for (const Int sign : {Int(1), Int(-1)}) {
      const ClassVector w{Int(0), -a * m * sign, b * m * sign};
      ++cert.checked;
      if (q_alpha(w, alpha) >= 0) cert.violations.push_back({w, "kernel_negative"});
    }
  }

  std::sort(cert.violations.begin(), cert.violations.end(),
            [](const SupportViolation& x, const SupportViolation& y) {
              if (x.cls != y.cls) return x.cls < y.cls;
              return x.check < y.check;
            });
  return cert;
}

}  // namespace stabsys
