// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each check pins its tolerances in code; everything is
// exact rational arithmetic unless stated otherwise.

#include "stabsys/bounds.hpp"
#include "stabsys/charges.hpp"
#include "stabsys/formal.hpp"
#include "stabsys/quadratic.hpp"
#include "stabsys/regions.hpp"
#include "stabsys/walls.hpp"

#include "../test_support.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace stabsys;
using stabsys::testing::Rng;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

// --- criterion 1: BG reconstruction identity --------------------------------

// Independent oracle: the six coefficient equations of the decomposition
// Re*Delta_R + Im*Delta_I = Delta, expanded over the monomial basis, plus
// the real-row reconstruction against gamma n + d - k.
void check_six_equation_system(const Rational& alpha, const Rational& beta,
                               const BGCoefficients& c) {
  require(beta * c.A + c.D == c.q, "n^2 coefficient");
  require(-c.B == c.p, "d^2 coefficient");
  require(-alpha * c.C == c.u - 1, "k^2 coefficient");
  require(beta * c.B - c.A + c.E == 0, "nd coefficient");
  require(beta * c.C - alpha * c.A + c.F == 1, "nk coefficient");
  require(-c.C - alpha * c.B == 1, "dk coefficient");
}

void criterion_bg_reconstruction() {
  Rng rng(811);
  for (int i = 0; i < 500; ++i) {
    const ParamTriple p = stabsys::testing::rand_in_S(rng, 20);
    const auto window = t_window(p.alpha, p.beta, p.gamma);
    require(window.has_value(), "t-window empty inside S at alpha=" + to_string(p.alpha) +
                                    " beta=" + to_string(p.beta) +
                                    " gamma=" + to_string(p.gamma));
    const Rational t = window->midpoint();
    const BGCoefficients c = bg_solve(p.alpha, p.beta, p.gamma, t);
    check_six_equation_system(p.alpha, p.beta, c);
    require(c.re_n == p.gamma && c.re_d == 1 && c.re_k == Rational(-1),
            "real-row reconstruction failed at alpha=" + to_string(p.alpha) +
                " beta=" + to_string(p.beta));
  }
  const BGCoefficients spot = bg_solve(Rational(1), Rational(2), Rational(7), Rational(2));
  require(spot.p == 1 && spot.q == 0 && spot.u == 1 && spot.A == Rational(-3, 2),
          "spot value (1,2,7,2) -> (p,q,u,A) = (1,0,1,-3/2)");
}

// --- criterion 2: Delta decomposition is the zero polynomial ----------------

void criterion_delta_decomposition() {
  Rng rng(812);
  for (int i = 0; i < 200; ++i) {
    const Rational alpha = stabsys::testing::rand_positive_rational(rng, 8, 9);
    const Rational beta = stabsys::testing::rand_signed_rational(rng, 8, 9);
    const Rational u = 1 + stabsys::testing::rand_nonneg_rational(rng, 3, 4) * alpha / 3;
    const Rational p = (alpha + 1 - u) / (alpha * alpha);
    const Rational q = stabsys::testing::rand_nonneg_rational(rng, 6, 7);
    const Rational A = stabsys::testing::rand_signed_rational(rng, 6, 7);
    const auto [dr, di] = delta_forms(alpha, beta, p, q, u, A);
    // direct monomial expansion with Re = (beta, -1, -alpha), Im = (1, 0, 0)
    require(beta * dr.cn + di.cn == q, "n^2");
    require(-dr.cd == p, "d^2");
    require(-alpha * dr.ck == u - 1, "k^2");
    require(beta * dr.cd - dr.cn + di.cd == 0, "nd");
    require(beta * dr.ck - alpha * dr.cn + di.ck == 1, "nk");
    require(-dr.ck - alpha * dr.cd == 1, "dk");
  }
}

// --- criterion 3: support certificates ---------------------------------------

void criterion_support_certificates() {
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    const SupportCertificate cert = support_certificate(alpha, Rational(0), 30, 4);
    require(cert.violations.empty(),
            "violations at alpha=" + to_string(alpha) + ": " +
                std::to_string(cert.violations.size()));
    require(cert.checked > 0, "empty scan");
    const Rational floor = alpha < 1 ? alpha * alpha : Rational(1);
    require(cert.ratio_min && *cert.ratio_min >= floor, "ratio floor violated");
  }
}

// --- criterion 4: wall consistency -------------------------------------------

void criterion_wall_consistency() {
  for (const auto& [alpha, beta] :
       std::vector<std::pair<Rational, Rational>>{{Rational(1), Rational(3)},
                                                  {Rational(2), Rational(5, 2)}}) {
    for (long long n = 1; n <= 20; ++n)
      for (long long d = -20; d <= 20; ++d)
        for (long long k = 0; k <= 20; ++k) {
          const ClassVector c{n, d, k};
          const ClassVector probe{0, 0, 1};
          if (is_parallel(probe, -c)) continue;
          if (Rational(-c.d) + alpha * (-c.k) - beta * (-c.n) == 0) continue;
          const auto wall = numerical_wall(probe, -c, alpha, beta);
          if (!wall) continue;
          require(*wall == actual_wall_gamma0(c, alpha, beta),
                  "mismatch at " + to_string(c));
        }
  }
  require(actual_wall_gamma0({1, 0, 2}, Rational(1), Rational(3)) == Rational(3),
          "worked case (1,0,2) at alpha=1, beta=3");
}

// --- criterion 5: geometric stability scans ----------------------------------

void criterion_geometric_scans() {
  std::vector<ParamTriple> grid;
  for (const Rational alpha :
       {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(7, 2)})
    for (const auto& [beta, gamma] :
         std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(3, 2)},
                                                    {Rational(1), Rational(2)},
                                                    {Rational(3, 2), Rational(9, 8)},
                                                    {Rational(2), Rational(3)},
                                                    {Rational(3), Rational(5, 4)}})
      grid.push_back({alpha, beta, gamma});
  require(grid.size() == 25, "grid size");

  ScanOptions opts;
  opts.bound = 40;
  opts.mode = ScanMode::MinimalObject;
  for (const auto& p : grid) {
    for (const ClassVector target : {ClassVector{0, 1, 0}, ClassVector{0, 0, 1},
                                     ClassVector{0, 1, 1}}) {
      const auto destab = destabilizer_scan(target, p.alpha, p.beta, p.gamma, opts);
      for (const auto& c : destab)
        require(c.k >= c.d + c.n, "destabilizer with k < d+n for " + to_string(target));
      if (target == ClassVector{0, 0, 1})
        require(destab.empty(), "nonempty scan for (0,0,1)");
      if (target == ClassVector{0, 1, 0})
        for (const auto& c : destab)
          require(c.k == c.d + c.n, "non-extremal survivor for (0,1,0)");
    }
  }
}

// --- criterion 6: chamber monotonicity ----------------------------------------

void criterion_chamber_monotonicity() {
  ScanOptions opts;
  opts.bound = 5;
  opts.mode = ScanMode::ShiftedStable;
  const ChamberScan scan = chamber_scan({-1, 0, -2}, Rational(1), Rational(3), Rational(1),
                                        Rational(6), opts);
  require(scan.walls.size() == 1, "expected exactly one wall");
  require(*scan.walls[0].gamma0 == Rational(3), "wall at gamma = 3");
  require(scan.chambers.size() == 2, "two chambers");
  require(!scan.chambers[0].stable, "unstable below the wall");
  require(scan.chambers[1].stable, "stable above the wall");
}

// --- criterion 7: HN engine ----------------------------------------------------

void criterion_hn_engine() {
  const std::vector<std::string> corpus = {
      "two_step_chain.json", "transfer_psi1.json",   "transfer_psi0.json",
      "transfer_unmarked.json", "torsion_tower.json", "op_complete.json",
      "three_step.json",     "mixed_torsion.json",   "semistable_bundle.json",
      "shifted_noncomplete.json", "heart_cases.json", "lemma83_long.json",
      "quotient_interval.json"};
  require(corpus.size() >= 10, "fixture corpus too small");

  Rng rng(813);
  for (const auto& name : corpus) {
    const std::string path = stabsys::testing::fixture_path(name);
    std::ifstream in(path);
    require(bool(in), "missing fixture " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    // original plus three random subobject-order shuffles of the same JSON
    std::vector<FormalCategory> variants;
    variants.push_back(FormalCategory::from_json_text(text));
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      nlohmann::json doc = nlohmann::json::parse(text);
      for (auto& obj : doc["objects"]) {
        auto& subs = obj["subobjects"];
        if (!subs.is_array() || subs.size() < 2) continue;
        for (std::size_t i = subs.size() - 1; i > 0; --i) {
          const auto j = static_cast<std::size_t>(stabsys::testing::rand_int(rng, 0, i));
          std::swap(subs[i], subs[j]);
        }
      }
      variants.push_back(FormalCategory::from_json_text(doc.dump()));
    }

    for (const auto& [id, obj] : variants[0].objects()) {
      for (const Rational alpha : {Rational(0), Rational(1), Rational(3, 2)}) {
        const HNFiltration reference = hn_filtration(variants[0], id, alpha);
        ClassVector sum;
        for (std::size_t i = 0; i < reference.factors.size(); ++i) {
          sum = sum + reference.factors[i].cls;
          if (i > 0)
            require(reference.factors[i].slope < reference.factors[i - 1].slope,
                    "slopes not strictly decreasing in " + name + "/" + id);
        }
        require(sum == obj.cls, "factors do not sum to the class in " + name + "/" + id);
        for (std::size_t v = 1; v < variants.size(); ++v) {
          const HNFiltration shuffled = hn_filtration(variants[v], id, alpha);
          require(shuffled.factors.size() == reference.factors.size(),
                  "shuffle changed the filtration length in " + name + "/" + id);
          for (std::size_t i = 0; i < shuffled.factors.size(); ++i)
            require(shuffled.factors[i].cls == reference.factors[i].cls,
                    "shuffle changed a factor class in " + name + "/" + id);
        }
      }
    }

    // transfer law on every psi1-marked edge
    for (const auto& edge : variants[0].elementary()) {
      if (!edge.psi1_nonzero.has_value() || !*edge.psi1_nonzero) continue;
      const auto res =
          hn_transfer_check(variants[0], edge.from, edge.to, edge.along, Rational(1));
      require(res.outcome == TransferOutcome::Pass,
              "transfer check failed for " + name + ": " + res.detail);
    }
  }
}

// --- criterion 8: large-gamma limit --------------------------------------------

void criterion_large_gamma_limit() {
  // Distribution note: beta = 0 and alpha >= 1 with d, k >= 0 make the
  // convergence constant |d-k|/|d+alpha k| at most 1, so the 1e-6 tolerance
  // at gamma = 1e6 is provable rather than empirical.
  Rng rng(814);
  const Rational gamma(1000000);
  const Rational tolerance(1, 1000000);
  int tested = 0;
  while (tested < 100) {
    const long long n = stabsys::testing::rand_int(rng, 1, 20);
    const long long d = stabsys::testing::rand_int(rng, 0, 20);
    const long long k = stabsys::testing::rand_int(rng, 0, 20);
    if (d == 0 && k == 0) continue;  // mu_alpha = beta = 0 excluded
    const Rational alpha = 1 + stabsys::testing::rand_nonneg_rational(rng, 9, 10);
    const Rational beta(0);
    const ClassVector c{n, d, k};
    ++tested;
    const SlopeValue limit = large_gamma_limit(c, alpha, beta);
    const SlopeValue at = mu_tilt(c, alpha, beta, gamma);
    require(at.is_finite() && limit.is_finite(), "finite slopes expected");
    Rational deviation = at.value() / gamma - limit.value();
    if (deviation < 0) deviation = -deviation;
    require(deviation <= tolerance,
            "deviation " + to_string(deviation) + " above 1e-6 for " + to_string(c));
  }
}

// --- criterion 9: orbit lemmas ---------------------------------------------------

void criterion_orbit_lemmas() {
  std::vector<Rational> alphas, betas;
  for (int i = 1; i <= 10; ++i) {
    alphas.push_back(Rational(i, 2));
    betas.push_back(Rational(i, 3));
  }

  // standard vs standard: equivalent iff alpha = alpha', with the beta-shear
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto src = ChargeFamily::standard_alpha_beta(alphas[i], betas[i]);
      const auto tgt = ChargeFamily::standard_alpha_beta(alphas[j], betas[j]);
      const auto v = orbit_compare(src, tgt);
      require(v.equivalent == (alphas[i] == alphas[j]), "standard pair verdict");
      if (v.equivalent) {
        require(v.witness.has_value(), "missing witness");
        require(v.witness->a == 1 && v.witness->c == 0 && v.witness->d == 1 &&
                    v.witness->b == betas[i] - betas[j],
                "beta-shear witness shape");
      }
    }

  // tilted vs standard: never equivalent
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto tilted = ChargeFamily::tilted(alphas[i], betas[i], Rational(2) + betas[j]);
      require(!orbit_compare(tilted, ChargeFamily::standard_alpha(alphas[j])).equivalent,
              "tilted vs standard");
      require(!orbit_compare(ChargeFamily::standard_alpha(alphas[j]), tilted).equivalent,
              "standard vs tilted");
    }

  // tilted vs tilted: gamma must match and the beta-relation must hold
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const Rational gamma_i = Rational(2) + Rational(i, 2);
      const Rational gamma_j = Rational(2) + Rational(j, 2);
      const auto a = ChargeFamily::tilted(alphas[i], betas[i], gamma_i);
      const auto b = ChargeFamily::tilted(alphas[j], betas[j], gamma_j);
      const bool relation =
          (alphas[i] - alphas[j]) * gamma_i - (alphas[j] + 1) * betas[i] ==
          -betas[j] * (alphas[i] + 1);
      const bool expected = (gamma_i == gamma_j) && relation;
      require(orbit_compare(a, b).equivalent == expected,
              "tilted pair verdict at i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
}

// --- criterion 10: minimum positive imaginary part -------------------------------

void criterion_min_positive_im() {
  Rng rng(815);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational alpha = stabsys::testing::rand_nonneg_rational(rng, 5, 7);
    const Rational beta = stabsys::testing::rand_signed_rational(rng, 5, 7);
    const Rational predicted = min_positive_im(alpha, beta);
    std::optional<Rational> best;
    for (long long n = -10; n <= 10; ++n)
      for (long long d = -10; d <= 10; ++d)
        for (long long k = -10; k <= 10; ++k) {
          const Rational im = Rational(d) + alpha * k - beta * n;
          if (im > 0 && (!best || im < *best)) best = im;
        }
    require(best.has_value(), "brute force found nothing");
    require(*best == predicted, "mismatch at alpha=" + to_string(alpha) +
                                    " beta=" + to_string(beta) + ": brute " +
                                    to_string(*best) + " vs " + to_string(predicted));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "BG reconstruction identity (500 random S-triples, exact)",
       criterion_bg_reconstruction},
      {2, "Delta decomposition is the zero polynomial (200 random, exact)",
       criterion_delta_decomposition},
      {3, "support certificates over |n|,|d|,|k| <= 30, zero violations",
       criterion_support_certificates},
      {4, "actual wall equals the numerical wall against (0,0,1)",
       criterion_wall_consistency},
      {5, "geometric stability scans over |n|,|d|,|k| <= 40, 25 PS points",
       criterion_geometric_scans},
      {6, "chamber monotonicity for -(1,0,2): one wall at gamma = 3",
       criterion_chamber_monotonicity},
      {7, "HN engine on the fixture corpus with shuffles and transfers",
       criterion_hn_engine},
      {8, "large-gamma limit within 1e-6 at gamma = 1e6 (exact compare)",
       criterion_large_gamma_limit},
      {9, "orbit lemmas on the 10x10 parameter grid", criterion_orbit_lemmas},
      {10, "min positive Im matches brute force on the lattice box",
       criterion_min_positive_im},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[512];
    if (error.empty()) {
      std::snprintf(line, sizeof(line), "[PASS] criterion %2d: %s (%.2fs)", criterion.id,
                    criterion.name, seconds);
    } else {
      std::snprintf(line, sizeof(line), "[FAIL] criterion %2d: %s (%.2fs): %s", criterion.id,
                    criterion.name, seconds, error.c_str());
      ++failures;
    }
    std::cout << line << std::endl;
  }
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures;
}
