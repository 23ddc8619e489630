#include "stabsys/walls.hpp"

#include "stabsys/bounds.hpp"
#include "stabsys/parallel.hpp"

#include <algorithm>
#include <map>

namespace stabsys {

namespace {

Rational im_denominator(const ClassVector& c, const Rational& alpha, const Rational& beta) {
  return Rational(c.d) + alpha * c.k - beta * c.n;
}

void require_ps(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (alpha < 0 || beta < 0 || gamma <= 1)
    throw std::domain_error("walls: parameters must lie in PS (alpha, beta >= 0, gamma > 1)");
}

}  // namespace

SlopeDiff slope_diff_fn(const ClassVector& a, const ClassVector& b,
                        const Rational& alpha, const Rational& beta) {
  const Rational ia = im_denominator(a, alpha, beta);
  const Rational ib = im_denominator(b, alpha, beta);
  if (ia == 0)
    throw std::domain_error("slope_diff: class " + to_string(a) + " has zero im-denominator");
  if (ib == 0)
    throw std::domain_error("slope_diff: class " + to_string(b) + " has zero im-denominator");
  SlopeDiff out;
  out.line.m = Rational(b.n) / ib - Rational(a.n) / ia;
  out.line.b = Rational(b.d - b.k) / ib - Rational(a.d - a.k) / ia;
  out.monotonicity = out.line.m > 0   ? Monotonicity::Increasing
                     : out.line.m < 0 ? Monotonicity::Decreasing
                                      : Monotonicity::Constant;
  return out;
}

std::optional<Rational> numerical_wall(const ClassVector& a, const ClassVector& b,
                                       const Rational& alpha, const Rational& beta) {
  if (is_parallel(a, b))
    throw std::domain_error("numerical_wall: classes must be non-parallel");
  const SlopeDiff diff = slope_diff_fn(a, b, alpha, beta);
  if (diff.line.m == 0) return std::nullopt;
  return -diff.line.b / diff.line.m;
}

Rational actual_wall_gamma0(const ClassVector& c, const Rational& alpha,
                            const Rational& beta) {
  if (c.n <= 0) throw std::domain_error("actual_wall_gamma0: requires n > 0");
  if (alpha == 0) throw std::domain_error("actual_wall_gamma0: requires alpha > 0");
  return (beta * c.n - Rational(c.d) * (alpha + 1)) / (alpha * c.n);
}

namespace {

// Gamma-independent membership tests for scan candidates; the slope
// comparison against the target is applied separately per gamma.
struct CandidateFilter {
  ScanMode mode;
  Rational alpha, beta;
  ClassVector target;

  bool structural(const ClassVector& c) const {
    return mode == ScanMode::MinimalObject ? minimal_side(c) : shifted_side(c);
  }

  // Subobjects of a torsion-side target (0,D,K): positive rank, the
  // elementary window, and the mu_alpha-semistable admissibility filter.
  bool minimal_side(const ClassVector& c) const {
    if (c.n < 1 || c.k < 0) return false;
    if (c.k < target.k) return false;
    const Rational window_lo = Rational(c.d - target.d) + alpha * (c.k - target.k);
    const Rational cut = beta * c.n;
    if (!(window_lo <= cut && cut < Rational(c.d) + alpha * c.k)) return false;
    return admissible_semistable(c, alpha);
  }

  // Subobjects F of E[1] (target = -[E]): F lands in the torsion side, the
  // extension F' = F + [E] in the free side.
  bool shifted_side(const ClassVector& c) const {
    if (c.is_zero() || c.n < 0 || c.k < 0 || c.d < 0) return false;
    const ClassVector e = -target;
    if (c.n >= 1) {
      if (!(im_denominator(c, alpha, beta) > 0)) return false;  // mu_alpha > beta
      if (c.k > c.d + c.n) {
        // Forced torsion subsystem: the maximal pure quotient must still
        // have slope > beta.
        if (!(Rational(c.d) + alpha * (c.d + c.n) > beta * c.n)) return false;
      }
    }
    const ClassVector fprime = c + e;
    if (fprime.n < 1) return false;
    if (!(Rational(fprime.d) + alpha * fprime.k <= beta * fprime.n)) return false;
    return true;
  }

  bool complete_bound(const ClassVector& c) const { return c.k <= c.d + c.n; }
};

std::vector<ClassVector> structural_candidates(const CandidateFilter& filter,
                                               long long bound, bool complete,
                                               int workers) {
  const long long n_lo = filter.mode == ScanMode::MinimalObject ? 1 : 0;
  const int nworkers = worker_count(workers);
  std::vector<std::vector<ClassVector>> slices(nworkers);
  parallel_slices(n_lo, bound + 1, nworkers, [&](long long lo, long long hi, long long w) {
    auto& out = slices[static_cast<std::size_t>(w)];
    for (long long n = lo; n < hi; ++n)
      for (long long d = -bound; d <= bound; ++d)
        for (long long k = 0; k <= bound; ++k) {
          const ClassVector c{n, d, k};
          if (complete && !filter.complete_bound(c)) continue;
          if (filter.structural(c)) out.push_back(c);
        }
  });
  std::vector<ClassVector> result;
  for (auto& s : slices) result.insert(result.end(), s.begin(), s.end());
  return result;
}

}  // namespace

std::vector<ClassVector> destabilizer_scan(const ClassVector& target,
                                           const Rational& alpha, const Rational& beta,
                                           const Rational& gamma,
                                           const ScanOptions& opts) {
  require_ps(alpha, beta, gamma);
  if (opts.bound < 1) throw std::domain_error("destabilizer_scan: bound must be >= 1");
  if (opts.mode == ScanMode::MinimalObject && target.n != 0)
    throw std::domain_error("destabilizer_scan: MinimalObject mode needs a torsion target");
  if (opts.mode == ScanMode::ShiftedStable) {
    if (target.n >= 0)
      throw std::domain_error("destabilizer_scan: ShiftedStable mode needs a shifted target");
    if (im_denominator(target, alpha, beta) < 0)
      throw std::domain_error("destabilizer_scan: shifted target lies outside the heart");
  }

  const CandidateFilter filter{opts.mode, alpha, beta, target};
  const SlopeValue target_slope = mu_tilt(target, alpha, beta, gamma);
  std::vector<ClassVector> out;
  for (const ClassVector& c :
       structural_candidates(filter, opts.bound, opts.complete, opts.workers)) {
    if (compare_slopes(mu_tilt(c, alpha, beta, gamma), target_slope) != Ordering::Less)
      out.push_back(c);
  }
  return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("simplest_rational_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_rational_between(-hi, -lo);
  // 0 <= lo < hi
  const Int fl = numerator(lo) / denominator(lo);  // floor for nonnegative lo
  if (Rational(fl) + 1 < hi) return Rational(fl + 1);
  const Rational lo_frac = lo - Rational(fl);
  const Rational hi_frac = hi - Rational(fl);
  if (lo_frac == 0) {
    const Int q = numerator(Rational(1) / hi_frac) / denominator(Rational(1) / hi_frac) + 1;
    return Rational(fl) + make_rational(Int(1), q);
  }
  return Rational(fl) + 1 / simplest_rational_between(1 / hi_frac, 1 / lo_frac);
}

ChamberScan chamber_scan(const ClassVector& target, const Rational& alpha,
                         const Rational& beta, const Rational& gamma_lo,
                         const Rational& gamma_hi, const ScanOptions& opts,
                         const FormalCategory* fixture) {
  if (!(gamma_lo < gamma_hi))
    throw std::domain_error("chamber_scan: empty gamma range");
  if (gamma_lo < 1) throw std::domain_error("chamber_scan: range must lie within (1, inf)");

  const CandidateFilter filter{opts.mode, alpha, beta, target};
  const std::vector<ClassVector> candidates =
      structural_candidates(filter, opts.bound, opts.complete, opts.workers);

  ChamberScan result;
  result.bound = opts.bound;

  const Rational target_im = im_denominator(target, alpha, beta);
  std::map<Rational, std::pair<ClassVector, Monotonicity>> walls;
  for (const ClassVector& c : candidates) {
    if (is_parallel(c, target)) continue;
    if (im_denominator(c, alpha, beta) == 0 || target_im == 0) continue;
    const SlopeDiff diff = slope_diff_fn(c, target, alpha, beta);
    if (diff.line.m == 0) continue;
    const Rational g0 = -diff.line.b / diff.line.m;
    if (g0 <= gamma_lo || g0 >= gamma_hi) {
      ++result.clipped_walls;
      continue;
    }
    walls.try_emplace(g0, c, diff.monotonicity);  // first candidate in lex order wins
  }

  for (const auto& [g0, info] : walls) {
    WallReport report;
    report.gamma0 = g0;
    report.pair = {info.first, target};
    report.in_range = g0 > 1;
    report.monotonicity = info.second;
    report.kind = WallKind::Numerical;
    if (fixture) {
      for (const auto& m : fixture->morphisms())
        if (m.from_cls == info.first && m.to_cls == target) report.kind = WallKind::Pseudo;
      if (opts.mode == ScanMode::ShiftedStable) {
        // Theorem-level hypotheses for an actual wall, checked on fixture
        // metadata: a non-complete mu_alpha-stable object of the target's
        // class with mu_alpha < beta (and beta below the minimal quotient
        // slope when the rank is >= 2), whose predicted wall equals gamma0.
        const ClassVector e = -target;
        for (const auto& [id, obj] : fixture->objects()) {
          if (obj.cls != e || obj.complete) continue;
          if (!obj.mu_alpha_stable.has_value() || !*obj.mu_alpha_stable) continue;
          if (!(mu_alpha(e, alpha) < SlopeValue(beta))) continue;
          if (e.n >= 2) {
            if (!obj.delta_min_quotient_slope) continue;
            if (!(beta < *obj.delta_min_quotient_slope)) continue;
          }
          if (e.n > 0 && alpha > 0 && actual_wall_gamma0(e, alpha, beta) == g0)
            report.kind = WallKind::ActualCandidate;
        }
      }
    }
    result.walls.push_back(std::move(report));
  }

  // One sample per chamber; midpoints unless the denominator balloons.
  std::vector<Rational> bounds_list{gamma_lo};
  for (const auto& w : result.walls) bounds_list.push_back(*w.gamma0);
  bounds_list.push_back(gamma_hi);
  const Int denominator_cap = Int(1000000);
  for (std::size_t i = 0; i + 1 < bounds_list.size(); ++i) {
    ChamberVerdict verdict;
    verdict.lo = bounds_list[i];
    verdict.hi = bounds_list[i + 1];
    Rational sample = (verdict.lo + verdict.hi) / 2;
    if (denominator(sample) > denominator_cap)
      sample = simplest_rational_between(verdict.lo, verdict.hi);
    verdict.sample = sample;
    const SlopeValue target_slope = mu_tilt(target, alpha, beta, sample);
    for (const ClassVector& c : candidates) {
      if (compare_slopes(mu_tilt(c, alpha, beta, sample), target_slope) != Ordering::Less)
        verdict.destabilizers.push_back(c);
    }
    verdict.stable = verdict.destabilizers.empty();
    result.chambers.push_back(std::move(verdict));
  }
  return result;
}

SlopeValue large_gamma_limit(const ClassVector& c, const Rational& alpha,
                             const Rational& beta) {
  if (c.n == 0) throw std::domain_error("large_gamma_limit: requires n != 0");
  const Rational denom = Rational(c.d) + alpha * c.k - beta * c.n;  // n(mu_alpha - beta)
  if (denom == 0)
    throw std::domain_error("large_gamma_limit: mu_alpha = beta gives an infinite limit");
  return SlopeValue(-Rational(c.n) / denom);
}

BTag b_classify(const TiltedRep& rep, const FormalCategory& cat, const Rational& alpha,
                const Rational& beta) {
  (void)beta;
  if (!rep.t_part && rep.f_part) {
    if (hn_filtration(cat, *rep.f_part, alpha).factors.size() == 1)
      return BTag::ShiftOfSemistableFree;
    return BTag::NotInB;
  }
  if (!rep.f_part && rep.t_part) {
    if (hn_filtration(cat, *rep.t_part, alpha).factors.size() == 1)
      return BTag::SemistableTorsionSide;
    return BTag::NotInB;
  }
  return BTag::NotInB;
}

}  // namespace stabsys
