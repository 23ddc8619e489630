#include "stabsys/charges.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace stabsys;
using stabsys::testing::Rng;

TEST_SUITE_BEGIN("charges");

TEST_CASE("z_alpha on the stated examples") {
  CHECK(z_alpha({1, 0, 0}, Rational(1)) == ComplexRational{Rational(0), Rational(1)});
  CHECK(z_alpha({0, 1, 1}, Rational(1)) == ComplexRational{Rational(-2), Rational(0)});
  CHECK(z_alpha({2, 3, 1}, Rational(1, 2)) ==
        ComplexRational{Rational(-7, 2), Rational(2)});
  CHECK_THROWS_AS(z_alpha({1, 0, 0}, Rational(-1)), std::domain_error);
}

TEST_CASE("z_alpha_beta degenerates to z_alpha at beta = 0") {
  CHECK(z_alpha_beta({1, 0, 0}, Rational(1), Rational(0)) == z_alpha({1, 0, 0}, Rational(1)));
  CHECK(z_alpha_beta({1, 2, 0}, Rational(1), Rational(3)) ==
        ComplexRational{Rational(1), Rational(1)});
  // kernel vector of Z_1^beta: n = 0, d = -alpha k
  CHECK(z_alpha_beta({0, -1, 1}, Rational(1), Rational(5)).is_zero());
}

TEST_CASE("z_tilt on the stated examples") {
  CHECK(z_tilt({0, 1, 0}, Rational(2), Rational(5), Rational(9)) ==
        ComplexRational{Rational(1), Rational(1)});
  CHECK(slope(z_tilt({0, 1, 0}, Rational(1), Rational(2), Rational(3))) ==
        SlopeValue{Rational(-1)});
  CHECK(z_tilt({0, 0, 1}, Rational(1), Rational(0), Rational(2)) ==
        ComplexRational{Rational(-1), Rational(1)});
  CHECK(mu_tilt({0, 0, 1}, Rational(1), Rational(2), Rational(3)) == SlopeValue{Rational(1)});
  CHECK(z_tilt({0, 1, 1}, Rational(1), Rational(0), Rational(2)) ==
        ComplexRational{Rational(0), Rational(2)});
  CHECK(mu_tilt({0, 1, 1}, Rational(1), Rational(7), Rational(5)) == SlopeValue{Rational(0)});
}

TEST_CASE("tilted charge of a two-term complex equals the signed total") {
  // (t-part) - (f-part) evaluated separately agrees with the signed class.
  const ClassVector t_part{0, 2, 1}, f_part{1, 3, 2};
  const Rational a(1), b(3), g(2);
  const ComplexRational split = z_tilt(t_part, a, b, g) - z_tilt(f_part, a, b, g);
  CHECK(split == z_tilt(t_part - f_part, a, b, g));
}

TEST_CASE("slope branches") {
  CHECK(slope({Rational(1), Rational(1)}) == SlopeValue{Rational(-1)});
  CHECK(slope({Rational(-3), Rational(1)}) == SlopeValue{Rational(3)});
  CHECK(slope({Rational(-5), Rational(0)}).is_infinite());
}

TEST_CASE("mu_alpha on the stated examples") {
  CHECK(mu_alpha({2, 3, 1}, Rational(1)) == SlopeValue{Rational(2)});
  CHECK(mu_alpha({0, 4, 2}, Rational(1)).is_infinite());
  CHECK(mu_alpha({1, 0, 2}, Rational(1)) == SlopeValue{Rational(2)});
}

TEST_CASE("mu_tilt on the stated examples") {
  CHECK(mu_tilt({-1, 0, -2}, Rational(1), Rational(3), Rational(5)) ==
        SlopeValue{Rational(3)});
  CHECK(mu_tilt({1, 4, 0}, Rational(1), Rational(3), Rational(2)) ==
        SlopeValue{Rational(-6)});
}

TEST_CASE("phase display values") {
  CHECK(phase_display({Rational(-1), Rational(0)}) == doctest::Approx(1.0));
  CHECK(phase_display({Rational(0), Rational(1)}) == doctest::Approx(0.5));
  CHECK(phase_display({Rational(1), Rational(1)}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(phase_display({Rational(0), Rational(0)}), std::domain_error);
}

TEST_CASE("additivity of all four charge families on random class pairs") {
  Rng rng(101);
  const ChargeFamily families[] = {
      ChargeFamily::standard_alpha(Rational(2, 3)),
      ChargeFamily::standard_alpha_beta(Rational(2, 3), Rational(5, 7)),
      ChargeFamily::tilted(Rational(2, 3), Rational(5, 7), Rational(9, 4)),
      ChargeFamily::dagger(Rational(1), Rational(2), Rational(2), Rational(7), Rational(1),
                           Rational(-1)),
  };
  for (int i = 0; i < 2500; ++i) {
    const ClassVector a = testing::rand_class(rng, 40);
    const ClassVector b = testing::rand_class(rng, 40);
    for (const auto& f : families) {
      CHECK(f.evaluate(a + b) == f.evaluate(a) + f.evaluate(b));
    }
  }
}

TEST_CASE("beta shift moves only the real part, by exactly beta*n") {
  Rng rng(102);
  for (int i = 0; i < 2000; ++i) {
    const ClassVector c = testing::rand_class(rng, 30);
    const Rational alpha = testing::rand_nonneg_rational(rng, 8, 11);
    const Rational beta = testing::rand_signed_rational(rng, 8, 11);
    const ComplexRational with = z_alpha_beta(c, alpha, beta);
    const ComplexRational without = z_alpha(c, alpha);
    CHECK(with.im == without.im);
    CHECK(with.re - without.re == beta * c.n);
  }
}

TEST_CASE("seesaw: the slope of a sum lies weakly between the slopes") {
  Rng rng(103);
  const Rational alpha(1), beta(2), gamma(3);
  int used = 0;
  for (int i = 0; i < 20000 && used < 5000; ++i) {
    const ClassVector b = testing::rand_class(rng, 25);
    const ClassVector c = testing::rand_class(rng, 25);
    const ComplexRational zb = z_tilt(b, alpha, beta, gamma);
    const ComplexRational zc = z_tilt(c, alpha, beta, gamma);
    if (!(zb.im > 0) || !(zc.im > 0)) continue;
    ++used;
    const SlopeValue sa = mu_tilt(b + c, alpha, beta, gamma);
    const SlopeValue sb = slope(zb), sc = slope(zc);
    const SlopeValue lo = sb < sc ? sb : sc;
    const SlopeValue hi = sb < sc ? sc : sb;
    CHECK(lo <= sa);
    CHECK(sa <= hi);
  }
  CHECK(used >= 5000);
}

TEST_CASE("torsion classes have nonpositive tilted slope, zero only at d = k") {
  Rng rng(104);
  for (int i = 0; i < 4000; ++i) {
    const long long d = testing::rand_int(rng, 0, 30);
    const long long k = testing::rand_int(rng, 0, d);
    if (d == 0 && k == 0) continue;
    const Rational alpha = testing::rand_nonneg_rational(rng, 6, 7);
    const Rational beta = testing::rand_nonneg_rational(rng, 6, 7);
    const Rational gamma = 1 + testing::rand_positive_rational(rng, 6, 7);
    const SlopeValue s = mu_tilt({0, d, k}, alpha, beta, gamma);
    if (s.is_infinite()) continue;  // d + alpha k = 0 never happens here for d > 0
    CHECK(s <= SlopeValue{Rational(0)});
    if (d != k) CHECK(s < SlopeValue{Rational(0)});
    if (d == k) CHECK(s == SlopeValue{Rational(0)});
  }
}

TEST_CASE("semistable admissible classes obey the sign law across beta") {
  // n > 0 with mu_alpha > beta gives a negative tilted slope; mu_alpha < beta
  // a positive one.
  Rng rng(105);
  for (int i = 0; i < 4000; ++i) {
    const long long n = testing::rand_int(rng, 1, 20);
    const long long d = testing::rand_int(rng, 0, 20);
    const long long k = testing::rand_int(rng, 0, 20);
    if (k > d + n) continue;
    const Rational alpha = testing::rand_nonneg_rational(rng, 5, 5);
    const Rational beta = testing::rand_nonneg_rational(rng, 5, 5);
    const Rational gamma = 1 + testing::rand_positive_rational(rng, 5, 5);
    const ClassVector c{n, d, k};
    const SlopeValue mu = mu_alpha(c, alpha);
    const SlopeValue cut{beta};
    const SlopeValue tilt = mu_tilt(c, alpha, beta, gamma);
    if (tilt.is_infinite()) continue;
    if (mu > cut) CHECK(tilt < SlopeValue{Rational(0)});
    if (mu < cut) CHECK(tilt > SlopeValue{Rational(0)});
  }
}

TEST_CASE("slope is invariant under class negation") {
  Rng rng(106);
  for (int i = 0; i < 3000; ++i) {
    const ClassVector c = testing::rand_class(rng, 30);
    const Rational alpha = testing::rand_nonneg_rational(rng, 6, 7);
    const Rational beta = testing::rand_nonneg_rational(rng, 6, 7);
    const Rational gamma = testing::rand_signed_rational(rng, 6, 7);
    const ComplexRational z = z_tilt(c, alpha, beta, gamma);
    if (z.is_zero()) continue;
    CHECK(mu_tilt(c, alpha, beta, gamma) == mu_tilt(-c, alpha, beta, gamma));
  }
}

TEST_SUITE_END();
