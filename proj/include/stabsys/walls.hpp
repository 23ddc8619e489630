#pragma once

#include "stabsys/charges.hpp"
#include "stabsys/class_vector.hpp"
#include "stabsys/formal.hpp"
#include "stabsys/rational.hpp"
#include "stabsys/slope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace stabsys {

/// Slope difference as an affine function of gamma: f(gamma) = m*gamma + b.
struct GammaLine {
  Rational m;
  Rational b;
};

enum class Monotonicity { Increasing, Decreasing, Constant };

struct SlopeDiff {
  GammaLine line;
  Monotonicity monotonicity;
};

/// f(gamma) = mu_tilt(a) - mu_tilt(b); requires both im-denominators
/// d + alpha k - beta n to be nonzero. Monotone by the sign of m.
SlopeDiff slope_diff_fn(const ClassVector& a, const ClassVector& b,
                        const Rational& alpha, const Rational& beta);

/// The gamma at which two non-parallel classes have equal tilted slope, or
/// nullopt when the slope difference is a (possibly zero) constant.
/// Parallel classes are rejected.
std::optional<Rational> numerical_wall(const ClassVector& a, const ClassVector& b,
                                       const Rational& alpha, const Rational& beta);

/// gamma_0 = (beta n - d(alpha+1)) / (alpha n) for a positive-rank class;
/// equals numerical_wall((0,0,1), -c) whenever the latter is defined.
Rational actual_wall_gamma0(const ClassVector& c, const Rational& alpha,
                            const Rational& beta);

enum class ScanMode { MinimalObject, ShiftedStable };

struct ScanOptions {
  long long bound{10};
  ScanMode mode{ScanMode::MinimalObject};
  bool complete{false};  // target records full h^0 (ShiftedStable only)
  int workers{0};
};

/// Enumerates candidate destabilizer classes in the box whose tilted slope
/// weakly exceeds the target's. MinimalObject mode runs the elementary-window
/// systems for torsion targets; ShiftedStable mode runs the subobject
/// constraints of a shifted free system. An empty list certifies numerical
/// stability within the box.
std::vector<ClassVector> destabilizer_scan(const ClassVector& target,
                                           const Rational& alpha, const Rational& beta,
                                           const Rational& gamma,
                                           const ScanOptions& opts);

enum class WallKind { Numerical, Pseudo, ActualCandidate };

struct WallReport {
  std::optional<Rational> gamma0;
  WallKind kind{WallKind::Numerical};
  std::pair<ClassVector, ClassVector> pair;  // (destabilizer, target)
  bool in_range{false};                      // gamma0 > 1
  Monotonicity monotonicity{Monotonicity::Constant};
};

struct ChamberVerdict {
  Rational lo, hi;
  Rational sample;
  bool stable{false};  // within the scanned box
  std::vector<ClassVector> destabilizers;
};

struct ChamberScan {
  std::vector<WallReport> walls;        // in-range walls, ordered by gamma0
  std::vector<ChamberVerdict> chambers;
  long long bound{0};
  std::size_t clipped_walls{0};         // numerical walls outside the range
};

/// Collects numerical walls of the target over all structural candidate
/// classes in the box, then samples one rational point per chamber and runs
/// the destabilizer scan there. Verdicts are box-relative. The optional
/// fixture upgrades wall kinds (morphism witness -> Pseudo; the stated
/// stability hypotheses -> ActualCandidate).
ChamberScan chamber_scan(const ClassVector& target, const Rational& alpha,
                         const Rational& beta, const Rational& gamma_lo,
                         const Rational& gamma_hi, const ScanOptions& opts,
                         const FormalCategory* fixture = nullptr);

/// lim_{gamma -> inf} mu_tilt/gamma = -1/(mu_alpha - beta); requires n != 0
/// and mu_alpha != beta.
SlopeValue large_gamma_limit(const ClassVector& c, const Rational& alpha,
                             const Rational& beta);

enum class BTag { ShiftOfSemistableFree, SemistableTorsionSide, NotInB };

/// Set-B classification of a tilted object: exactly one cohomology present
/// and that cohomology mu_alpha-semistable (a single HN factor in the
/// fixture).
BTag b_classify(const TiltedRep& rep, const FormalCategory& cat,
                const Rational& alpha, const Rational& beta);

/// Simplest rational strictly between lo and hi (Stern-Brocot descent);
/// keeps chamber sample denominators small.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace stabsys
