#include "fwexact/scalars.hpp"

#include <doctest.h>

#include <random>

using namespace fwexact;

TEST_CASE("exact scalar arithmetic") {
  ExactScalar half = ExactScalar::of(1, 2);
  ExactScalar i = ExactScalar::i();
  CHECK(half * i == ExactScalar(Rational(0), Rational(1, 2)));
  CHECK(ExactScalar(Rational(3), Rational(4)).conj() ==
        ExactScalar(Rational(3), Rational(-4)));
  CHECK(ExactScalar::of(-1) * ExactScalar::of(1, 8) == ExactScalar::of(-1, 8));

  ExactScalar z{Rational(1, 3), Rational(-2, 7)};
  CHECK(z / z == ExactScalar::one());
  CHECK((z * z.conj()).is_real());
  CHECK_THROWS_AS(z / ExactScalar::zero(), std::domain_error);
}

TEST_CASE("exactness on random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int k = 0; k < 2000; ++k) {
    ExactScalar a{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    ExactScalar b{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("reduced form is maintained") {
  // The rational backend normalizes on every operation; spot-check the
  // invariant (gcd 1, positive denominator).
  Rational r = Rational(6) / Rational(-8);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 4);
  ExactScalar s{Rational(2, 4), Rational(0)};
  CHECK(numerator(s.re) == 1);
  CHECK(denominator(s.re) == 2);
  CHECK(ExactScalar::zero().str() == "0");
}

TEST_CASE("coefficient merge") {
  UnitVector hq_m4{1, 1, -4, 0, 0};
  Coefficient c1{ExactScalar::of(3), hq_m4};
  Coefficient c2{ExactScalar::of(1), hq_m4};
  auto merged = coeff_merge(c1, c2);
  REQUIRE(merged.has_value());
  CHECK(merged->scalar == ExactScalar::of(4));
  CHECK(merged->units == hq_m4);

  Coefficient c3{ExactScalar::of(1), UnitVector{1, 0, -4, 0, 0}};
  CHECK(!coeff_merge(c1, c3).has_value());

  auto zero = coeff_merge(c1, -c1);
  REQUIRE(zero.has_value());
  CHECK(zero->is_zero());
}

TEST_CASE("dimensions in Gaussian units") {
  // 1/(2mc) with sigma.pi content is dimensionless.
  Coefficient inv_2mc{ExactScalar::of(1, 2), UnitVector{0, 0, -1, -1, 0}};
  CHECK(dimension_of(inv_2mc, OperatorContent{1, 0, 0, false}) ==
        Dimension::dimensionless());

  // q phi is an energy.
  Coefficient q{ExactScalar::one(), UnitVector{0, 1, 0, 0, 0}};
  CHECK(dimension_of(q, OperatorContent{0, 0, 0, true}) == Dimension::energy());

  // mu'' c^-1 sigma.B is an energy (mu' sigma.B).
  Coefficient mu_prime{ExactScalar::one(), UnitVector{0, 0, 0, -1, 1}};
  CHECK(dimension_of(mu_prime, OperatorContent{0, 0, 1, false}) ==
        Dimension::energy());

  // E and B share M^1/2 L^-1/2 T^-1.
  Coefficient unit_c = Coefficient::one();
  Dimension e = dimension_of(unit_c, OperatorContent{0, 1, 0, false});
  Dimension b = dimension_of(unit_c, OperatorContent{0, 0, 1, false});
  CHECK(e == b);
  CHECK(e == Dimension{Rational(1, 2), Rational(-1, 2), Rational(-1)});
}
