#include "stabsys/bounds.hpp"

namespace stabsys {

Int h0_upper(const SheafClass& c, bool mu_min_nonneg) {
  if (c.n < 0) throw std::domain_error("h0_upper: rank must be nonnegative");
  if (c.n == 0) {
    if (c.d < 0) throw std::domain_error("h0_upper: torsion sheaf with negative degree");
    return c.d;
  }
  if (c.d < 0) {
    if (mu_min_nonneg)
      throw std::domain_error("h0_upper: d < 0 inconsistent with mu_min >= 0");
    return Int(0);  // semistable of negative degree has no sections
  }
  return c.d + c.n;
}

Rational clifford_upper(const SheafClass& c, const Genus& g) {
  if (c.n < 1) throw std::domain_error("clifford_upper: rank must be >= 1");
  const Rational mu = Rational(c.d) / Rational(c.n);
  if (mu < 0 || mu > 2 * g.g - 2)
    throw std::domain_error("clifford_upper: slope outside [0, 2g-2] hypothesis");
  return Rational(c.d) / 2 + c.n;
}

bool system_section_bound(const ClassVector& c) {
  if (c.n <= 0) throw std::domain_error("system_section_bound: requires n > 0");
  return c.k <= c.d + c.n;
}

bool system_clifford_bound(const ClassVector& c, const Genus&) {
  if (c.n <= 0) throw std::domain_error("system_clifford_bound: requires n > 0");
  return 2 * c.k <= c.d + 2 * c.n;
}

CliffordIndexResult clifford_index(const Int& n, const Int& d, const Int& h0,
                                   const std::optional<Genus>& g) {
  if (n < 1) throw std::domain_error("clifford_index: rank must be >= 1");
  if (h0 < 0) throw std::domain_error("clifford_index: h0 must be nonnegative");
  CliffordIndexResult res;
  res.value = Rational(d - 2 * (h0 - n)) / Rational(n);
  if (g) {
    const Int h1 = h1_from_rr(n, d, h0, *g);
    res.h1 = h1;
    res.h1_negative = h1 < 0;
    res.printed_form = Rational(g->g - 1) - Rational(h0 + h1) / Rational(n);
    res.printed_form_mismatch = *res.printed_form != res.value;
  }
  return res;
}

ExtremalVerdict extremal_classify(const ClassVector& c, const Genus& g) {
  if (c.n < 0 || c.k < 0) throw std::domain_error("extremal_classify: negative n or k");
  ExtremalVerdict v;
  if (c.n == 0) {
    v.tag = ExtremalTag::TorsionCase;
    return v;
  }
  if (c.k != c.d + c.n || c.k <= 0 || c.d < 0) {
    v.tag = ExtremalTag::NotExtremal;
    return v;
  }
  if (g.g >= 1) {
    // Equality forces d = 0, so only the complete trivial system survives.
    v.tag = c.d == 0 ? ExtremalTag::CompleteTrivial : ExtremalTag::NotExtremal;
    return v;
  }
  v.tag = ExtremalTag::P1Sums;
  v.partition.assign(static_cast<std::size_t>(c.n.convert_to<long long>()), Int(0));
  v.partition[0] = c.d;  // lexicographically maximal partition of d
  return v;
}

bool admissible_semistable(const ClassVector& c, const Rational& alpha) {
  if (alpha < 0) throw std::domain_error("admissible_semistable: alpha must be nonnegative");
  if (c.n < 0 || c.k < 0)
    throw std::domain_error("admissible_semistable: negative n or k");
  if ((c.n == 0 || c.k > 0) && c.d < 0) return false;
  if (c.n > 0 && c.k > 0 && c.k > c.d + c.n) return false;
  return true;
}

}  // namespace stabsys
