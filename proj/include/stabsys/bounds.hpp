#pragma once

#include "stabsys/class_vector.hpp"
#include "stabsys/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabsys {

/// Numerical data of a coherent sheaf on the curve. When both h0 and genus
/// are recorded, h1 is determined by Riemann-Roch bookkeeping
/// h0 - h1 = d + n(1 - g).
struct SheafClass {
  Int n{0};
  Int d{0};
  std::optional<Int> h0;
  std::optional<Genus> genus;
};

/// h1 from Riemann-Roch; may be negative for inconsistent inputs.
inline Int h1_from_rr(const Int& n, const Int& d, const Int& h0, const Genus& g) {
  return h0 - d - n * (1 - Int(g.g));
}

/// Section-count bound. With the mu_min >= 0 hypothesis flag returns d + n;
/// without it the sheaf is taken to be semistable, so d < 0 forces zero
/// sections. Torsion sheaves (n = 0) have exactly d sections.
Int h0_upper(const SheafClass& c, bool mu_min_nonneg);

/// Clifford bound d/2 + n under the slope-range hypothesis
/// 0 <= d/n <= 2g - 2. Out-of-range slopes are a hypothesis error.
Rational clifford_upper(const SheafClass& c, const Genus& g);

/// k <= d + n for pure systems (n > 0).
bool system_section_bound(const ClassVector& c);

/// k <= d/2 + n (hypothesis range mu_{alpha,max} <= 2g; kept with the bound
/// but not enforced numerically).
bool system_clifford_bound(const ClassVector& c, const Genus& g);

struct CliffordIndexResult {
  Rational value;                        // (d - 2(h0 - n))/n
  std::optional<Int> h1;                 // Riemann-Roch h1 when genus given
  std::optional<Rational> printed_form;  // (g-1) - (h0+h1)/n, as printed
  bool printed_form_mismatch{false};     // flagged as input inconsistency
  bool h1_negative{false};
};

/// Clifford index of a rank-n sheaf with h0 recorded sections. When the
/// genus is supplied the value is cross-checked against the printed
/// alternative form via Riemann-Roch; a disagreement is reported on the
/// result (the two printed formulas differ by a constant 2, see README).
CliffordIndexResult clifford_index(const Int& n, const Int& d, const Int& h0,
                                   const std::optional<Genus>& g);

enum class ExtremalTag { CompleteTrivial, P1Sums, NotExtremal, TorsionCase };

struct ExtremalVerdict {
  ExtremalTag tag{ExtremalTag::NotExtremal};
  std::vector<Int> partition;  // P1Sums witness, lexicographically maximal
};

/// Classifies classes attaining k = d + n among mu_alpha-semistable systems:
/// the complete trivial system for g >= 1 (forcing d = 0), or direct sums of
/// complete line-bundle systems on the rational curve.
ExtremalVerdict extremal_classify(const ClassVector& c, const Genus& g);

/// Necessary-condition filter for mu_alpha-semistability; a superset of the
/// true semistable classes (which are not numerically decidable):
///   (n = 0 or k > 0)  =>  d >= 0,
///   n > 0, k > 0, d >= 0  =>  k <= d + n.
/// Rejects negative n or k.
bool admissible_semistable(const ClassVector& c, const Rational& alpha);

}  // namespace stabsys
