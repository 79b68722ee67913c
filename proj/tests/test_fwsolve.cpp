#include "fwexact/fwsolve.hpp"

#include <doctest.h>

using namespace fwexact;

namespace {

Coefficient real_units(long num, long den, UnitVector u) {
  return {ExactScalar::of(num, den), u};
}
Coefficient imag_units(long num, long den, UnitVector u) {
  return {ExactScalar(Rational(0), Rational(num, den)), u};
}

}  // namespace

TEST_CASE("dirac recursion low orders") {
  OpSeries x = solve_dirac(7);

  OpExpr x1;
  x1.add_term(real_units(1, 2, {0, 0, -1, 0, 0}), OpMonomial::sigma_pi(1));
  CHECK(x.at(1) == x1);
  CHECK(x.at(2).empty());
  CHECK(x.at(4).empty());
  CHECK(x.at(6).empty());

  OpExpr x3;
  x3.add_term(real_units(-1, 8, {0, 0, -3, 0, 0}), OpMonomial::sigma_pi(3));
  x3.add_term(imag_units(-1, 4, {1, 1, -2, 0, 0}),
              OpMonomial::with_field(Field::SigmaE));
  CHECK(x.at(3) == x3);

  OpExpr x5;
  x5.add_term(real_units(1, 16, {0, 0, -5, 0, 0}), OpMonomial::sigma_pi(5));
  x5.add_term(imag_units(3, 16, {1, 1, -4, 0, 0}),
              OpMonomial::with_field(Field::SigmaE, 2));
  x5.add_term(imag_units(1, 8, {1, 1, -4, 0, 0}),
              OpMonomial::with_field(Field::EdotPi, 0, 1));
  CHECK(x.at(5) == x5);
}

TEST_CASE("closed form evaluates the printed coefficients") {
  OpSeries cf = closed_form_dirac(5);
  // j=0: s.p / 2m.
  OpExpr j0;
  j0.add_term(real_units(1, 2, {0, 0, -1, 0, 0}), OpMonomial::sigma_pi(1));
  CHECK(cf.at(1) == j0);
  // j=2 entry carries a_2=2, b_2=3, c_2=2.
  OpExpr j2;
  j2.add_term(real_units(2, 32, {0, 0, -5, 0, 0}), OpMonomial::sigma_pi(5));
  j2.add_term(imag_units(3, 16, {1, 1, -4, 0, 0}),
              OpMonomial::with_field(Field::SigmaE, 2));
  j2.add_term(imag_units(2, 16, {1, 1, -4, 0, 0}),
              OpMonomial::with_field(Field::EdotPi, 0, 1));
  CHECK(cf.at(5) == j2);
}

TEST_CASE("recursion equals the closed form at desk order") {
  OpSeries x = solve_dirac(13);
  auto cmp = compare_series(x, closed_form_dirac(13), 13);
  CHECK(cmp.equal);
  CHECK(check_dirac_structure(x, 13).pass);
  CHECK(check_x_dimensionless(x, 13).pass);
}

TEST_CASE("pauli recursion low orders") {
  OpSeries x = solve_dirac(10);
  OpSeries xp = solve_pauli(8, x);
  CHECK(xp.at(1).empty());
  CHECK(xp.at(2).empty());

  OpExpr xp3;
  xp3.add_term(imag_units(-1, 2, {0, 0, -1, 0, 1}),
               OpMonomial::with_field(Field::SigmaE));
  CHECK(xp.at(3) == xp3);

  OpExpr xp4;
  xp4.add_term(real_units(1, 2, {0, 0, -2, 0, 1}),
               OpMonomial::with_field(Field::BdotPi));
  CHECK(xp.at(4) == xp4);

  OpExpr xp5;
  xp5.add_term(imag_units(3, 8, {0, 0, -3, 0, 1}),
               OpMonomial::with_field(Field::SigmaE, 2));
  xp5.add_term(imag_units(-1, 4, {0, 0, -3, 0, 1}),
               OpMonomial::with_field(Field::EdotPi, 0, 1));
  CHECK(xp.at(5) == xp5);

  OpExpr xp6;
  xp6.add_term(real_units(-3, 8, {0, 0, -4, 0, 1}),
               OpMonomial::with_field(Field::BdotPi, 2));
  CHECK(xp.at(6) == xp6);

  auto cmp = compare_series(xp, closed_form_pauli(8), 8);
  CHECK(cmp.equal);
  CHECK(check_pauli_structure(xp, 8).pass);
  CHECK(check_x_dimensionless(xp, 8).pass);
}

TEST_CASE("sensitivity: a perturbed closed form is localized") {
  OpSeries cf = closed_form_dirac(9);
  OpExpr entry = cf.at(5);
  entry.add_term(real_units(1, 1000, {0, 0, -5, 0, 0}),
                 OpMonomial::sigma_pi(5));
  cf.set(5, entry);
  auto cmp = compare_series(solve_dirac(9), cf, 9);
  CHECK(!cmp.equal);
  REQUIRE(cmp.first_diff.has_value());
  CHECK(cmp.first_diff->order == 5);
  CHECK(cmp.all_diffs.size() == 1);
}

TEST_CASE("appendix phi sign breaks the match at order 3 on sigma.E") {
  OpSeries x = solve_dirac(9, +1);
  auto cmp = compare_series(x, closed_form_dirac(9), 9);
  CHECK(!cmp.equal);
  REQUIRE(cmp.first_diff.has_value());
  CHECK(cmp.first_diff->order == 3);
  for (const auto& [key, s] : cmp.first_diff->diff.terms())
    CHECK(key.mono.field == Field::SigmaE);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(solve_dirac(0), std::domain_error);
  OpSeries x = solve_dirac(4);
  CHECK_THROWS_AS(solve_pauli(2, x), std::domain_error);
  CHECK_THROWS_AS(solve_pauli(8, x), std::invalid_argument);

  OpSeries physical(Grading::Physical);
  CHECK_THROWS_AS(compare_series(x, physical, 3), std::invalid_argument);
}
