#include "fwexact/hamio.hpp"

#include <doctest.h>

using namespace fwexact;

namespace {

Coefficient real_units(long num, long den, UnitVector u) {
  return {ExactScalar::of(num, den), u};
}

const UnitVector kQ{0, 1, 0, 0, 0};
const UnitVector kQH{1, 1, 0, 0, 0};
const UnitVector kMupp{0, 0, 0, 0, 1};

}  // namespace

TEST_CASE("xdag_x leading orders") {
  OpSeries x = solve_dirac(8);
  OpSeries a = xdag_x(x, 6);
  OpExpr a2;
  a2.add_term(real_units(1, 4, {0, 0, -2, 0, 0}), OpMonomial::sigma_pi(2));
  CHECK(a.at(2) == a2);
  CHECK(a.at(3).empty());
  // A_4 = -(s.pi)^4/8m^4 - (q hbar/4m^3)(Expi).sigma, hermitian.
  OpExpr a4;
  a4.add_term(real_units(-1, 8, {0, 0, -4, 0, 0}), OpMonomial::sigma_pi(4));
  a4.add_term(real_units(-1, 4, {1, 1, -3, 0, 0}),
              OpMonomial::with_field(Field::ExPiSigma));
  CHECK(a.at(4) == a4);
  CHECK(is_hermitian(a.at(4)).hermitian);

  OpSeries zero(Grading::Recursion);
  zero.declare_solved_to(8);
  CHECK(xdag_x(zero, 6).entries().empty());
}

TEST_CASE("dirac assembly low orders, compact representation") {
  OpSeries x = solve_dirac(10);
  HamiltonianSeries h = assemble_h_dirac(x, 6, Route::Commutator);
  CHECK(h.rest_energy);

  OpExpr h0;
  h0.add_term({ExactScalar::one(), kQ}, OpMonomial::phi_mono());
  h0.add_term(real_units(1, 2, {0, 0, -1, 0, 0}), OpMonomial::sigma_pi(2));
  CHECK(h.body.at(0) == h0);
  CHECK(h.body.at(1).empty());

  OpExpr h2;
  h2.add_term(real_units(-1, 8, {0, 0, -3, 0, 0}), OpMonomial::sigma_pi(4));
  h2.add_term(real_units(-1, 4, {1, 1, -2, 0, 0}),
              OpMonomial::with_field(Field::ExPiSigma));
  CHECK(h.body.at(2) == h2);
}

TEST_CASE("textbook anchor: expanded c^-1 and c^-2 blocks") {
  OpSeries x = solve_dirac(10);
  HamiltonianSeries h =
      physicalize(assemble_h_dirac(x, 6, Route::Commutator));

  OpExpr g1;
  g1.add_term(real_units(-1, 2, {1, 1, -1, 0, 0}),
              OpMonomial::with_field(Field::SigmaB));
  CHECK(h.body.at(1) == g1);

  // -pi^4/8m^3 + (q hbar/4m^2) sigma.(pi x E), the latter written as
  // -(q hbar/4m^2)(Expi).sigma.
  OpExpr g2;
  g2.add_term(real_units(-1, 8, {0, 0, -3, 0, 0}), OpMonomial::pi_pow(4));
  g2.add_term(real_units(-1, 4, {1, 1, -2, 0, 0}),
              OpMonomial::with_field(Field::ExPiSigma));
  CHECK(h.body.at(2) == g2);
}

TEST_CASE("square-root series are exact inverses") {
  // (1+A)^{1/2} (1+A)^{-1/2} = 1 as computed series, the lemma behind the
  // conjugation route.
  OpSeries x = solve_dirac(12);
  OpSeries a = xdag_x(x, 10);
  int n_coeffs = 10 / 2 + 2;
  std::vector<Rational> plus_half(n_coeffs), minus_half(n_coeffs),
      inverse(n_coeffs);
  for (int k = 0; k < n_coeffs; ++k) {
    plus_half[k] = binomial(Rational(1, 2), k);
    minus_half[k] = binomial(Rational(-1, 2), k);
    inverse[k] = k % 2 ? -1 : 1;
  }
  OpSeries s_plus = compose_scalar_series(plus_half, a, 10);
  OpSeries s_minus = compose_scalar_series(minus_half, a, 10);
  OpSeries inv = compose_scalar_series(inverse, a, 10);

  OpSeries identity(Grading::Recursion);
  identity.add(0, OpExpr::identity());
  CHECK(compare_series(series_mul(s_plus, s_minus, 10), identity, 10).equal);
  // ...and (1+A)^{-1/2} squared is the inverse series.
  CHECK(compare_series(series_mul(s_minus, s_minus, 10), inv, 10).equal);
}

TEST_CASE("route equivalence") {
  OpSeries x = solve_dirac(12);
  HamiltonianSeries a = assemble_h_dirac(x, 10, Route::Commutator);
  HamiltonianSeries b = assemble_h_dirac(x, 10, Route::Conjugation);
  CHECK(compare_hamiltonians(a, b, 10).equal);
}

TEST_CASE("hermiticity and the edotpi breakdown") {
  OpSeries x = solve_dirac(12);
  OpSeries xp = solve_pauli(11, x);
  AssemblyBreakdown bd;
  HamiltonianSeries hp = assemble_h_pauli(x, xp, 10, &bd);
  CHECK(check_hermiticity(hp, 10).pass);
  CHECK(check_hermiticity(physicalize(hp), 10).pass);

  // Each captured grade holds two opposite contributions.
  CHECK(!bd.edotpi_by_grade.empty());
  for (const auto& [g, by] : bd.edotpi_by_grade) {
    REQUIRE(by.size() == 2);
    OpExpr sum;
    for (const auto& [src, e] : by) sum += e;
    CHECK(sum.empty());
  }

  HamiltonianSeries hd = assemble_h_dirac(x, 10, Route::Commutator);
  CHECK(check_hermiticity(hd, 10).pass);
  CHECK(check_hermiticity(physicalize(hd), 10).pass);
}

TEST_CASE("pauli leading terms") {
  OpSeries x = solve_dirac(10);
  OpSeries xp = solve_pauli(9, x);
  HamiltonianSeries hp = assemble_h_pauli(x, xp, 8);
  CHECK(!hp.rest_energy);

  OpExpr g1;
  g1.add_term({-ExactScalar::one(), kMupp},
              OpMonomial::with_field(Field::SigmaB));
  CHECK(hp.body.at(1) == g1);

  OpExpr g2;
  g2.add_term(real_units(-1, 1, {0, 0, -1, 0, 1}),
              OpMonomial::with_field(Field::ExPiSigma));
  CHECK(hp.body.at(2) == g2);

  OpExpr g3;
  g3.add_term(real_units(1, 2, {0, 0, -2, 0, 1}),
              OpMonomial::with_field(Field::BdotPi, 0, 1));
  CHECK(hp.body.at(3) == g3);

  // Every H' term is linear in mu''.
  for (const auto& [g, e] : hp.body.entries())
    for (const auto& [key, s] : e.terms()) CHECK(key.units.mupp == 1);
}

TEST_CASE("closed-form structure functions") {
  ClosedFormTarget t = closed_form_target(HamKind::Total, 12);
  // The orbital function is gamma_pi, i.e. the binomial series of
  // sqrt(1+x^2).
  for (int n = 0; 2 * n <= 12; ++n)
    CHECK(t.orbital[2 * n] == binomial(Rational(1, 2), n));
  // Leading values of the spin structure functions.
  CHECK(t.sigma_b_dirac[0] == 1);          // 1/gamma at x=0
  CHECK(t.sigma_b_dirac[2] == Rational(-1, 2));
  CHECK(t.sigma_b_moment[0] == 1);         // undressed mu' sigma.B
  CHECK(t.b_dot_pi_moment[0] == Rational(1, 2));  // 1/(gamma(1+gamma))
  CHECK(t.ex_pi_dirac[0] == Rational(1, 2));      // 1/gamma - 1/(1+gamma)
  CHECK(t.ex_pi_moment[0] == 1);
  // The Dirac kind has no moment sector and vice versa.
  ClosedFormTarget d = closed_form_target(HamKind::Dirac, 8);
  CHECK(d.sigma_b_moment.is_zero());
  CHECK(d.b_dot_pi_moment.is_zero());
  ClosedFormTarget p = closed_form_target(HamKind::Pauli, 8);
  CHECK(p.orbital.is_zero());
  CHECK(p.sigma_b_dirac.is_zero());
}

TEST_CASE("closed forms and classical side") {
  HamiltonianSeries cf = closed_form_h(HamKind::Dirac, 8);
  // Orbital: mc^2 + pi^2/2m - pi^4/8m^3c^2 + pi^6/16m^5c^4.
  CHECK(cf.rest_energy);
  OpExpr orb0 = cf.body.at(0);
  bool found_pi2 = false;
  for (const auto& [key, s] : orb0.terms())
    if (key.mono == OpMonomial::pi_pow(2)) {
      found_pi2 = true;
      CHECK(s == ExactScalar::of(1, 2));
      CHECK(key.units == UnitVector{0, 0, -1, 0, 0});
    }
  CHECK(found_pi2);

  // sigma.B coefficient series: -(q hbar/2m)(1 - x^2/2 + 3x^4/8 - ...).
  OpExpr sb1 = cf.body.at(1);
  REQUIRE(sb1.size() == 1);
  CHECK(sb1.terms().begin()->second == ExactScalar::of(-1, 2));
  OpExpr sb3 = cf.body.at(3);
  for (const auto& [key, s] : sb3.terms())
    if (key.mono.field == Field::SigmaB) CHECK(s == ExactScalar::of(1, 4));

  // (Expi).sigma at leading order: -(q hbar/4m^2).
  OpExpr g2 = cf.body.at(2);
  for (const auto& [key, s] : g2.terms())
    if (key.mono.field == Field::ExPiSigma) CHECK(s == ExactScalar::of(-1, 4));

  // Classical side: gamma'_m = 0 equals the Dirac closed form exactly.
  CHECK(compare_hamiltonians(classical_h(8, Rational(0)), cf, 8).equal);

  // sigma.B full coefficient at x=0 is -(mu' + q hbar/2mc): two unit sectors.
  HamiltonianSeries cl = classical_h(8, Rational(1));
  OpExpr cl1 = cl.body.at(1);
  REQUIRE(cl1.size() == 2);
  for (const auto& [key, s] : cl1.terms()) {
    CHECK(key.mono.field == Field::SigmaB);
    if (key.units == kMupp) CHECK(s == -ExactScalar::one());
    if (key.units == UnitVector{1, 1, -1, 0, 0}) CHECK(s == ExactScalar::of(-1, 2));
  }
  // (B.pi)(s.pi) structure at x=0: +mu''/2m^2 at grade 3.
  OpExpr cl3 = cl.body.at(3);
  for (const auto& [key, s] : cl3.terms())
    if (key.mono.field == Field::BdotPi) {
      CHECK(s == ExactScalar::of(1, 2));
      CHECK(key.units == UnitVector{0, 0, -2, 0, 1});
    }
}

TEST_CASE("resummation and the main correspondence") {
  OpSeries x = solve_dirac(12);
  OpSeries xp = solve_pauli(11, x);
  HamiltonianSeries hd = assemble_h_dirac(x, 10, Route::Commutator);
  HamiltonianSeries hp = assemble_h_pauli(x, xp, 10);

  CHECK(compare_hamiltonians(physicalize(hd),
                             closed_form_h(HamKind::Dirac, 10), 10)
            .equal);
  CHECK(compare_hamiltonians(physicalize(hp),
                             closed_form_h(HamKind::Pauli, 10), 10)
            .equal);
  HamiltonianSeries total = ham_sum(hd, hp);
  CHECK(compare_hamiltonians(physicalize(total),
                             closed_form_h(HamKind::Total, 10), 10)
            .equal);
  CHECK(compare_hamiltonians(physicalize(total), classical_h(10, Rational(1)),
                             10)
            .equal);
  CHECK(check_structure_purity(physicalize(total), 10).pass);
  CHECK(check_energy_dimension(physicalize(total), 10).pass);
  CHECK(check_energy_dimension(hd, 10).pass);
}

TEST_CASE("quantum-classical pipeline and sensitivity") {
  QuantumClassicalResult r = compare_quantum_classical(6);
  CHECK(r.dirac.equal);
  CHECK(r.pauli.equal);

  // Perturbing the anomalous moment localizes at the sigma.B block, grade 1.
  OpSeries x = solve_dirac(8);
  OpSeries xp = solve_pauli(7, x);
  HamiltonianSeries total =
      ham_sum(assemble_h_dirac(x, 6, Route::Commutator),
              assemble_h_pauli(x, xp, 6));
  auto cmp = compare_hamiltonians(physicalize(total),
                                  classical_h(6, Rational(101, 100)), 6);
  CHECK(!cmp.equal);
  REQUIRE(cmp.first_diff.has_value());
  CHECK(cmp.first_diff->order == 1);
  for (const auto& [key, s] : cmp.first_diff->diff.terms())
    CHECK(key.mono.field == Field::SigmaB);
}

TEST_CASE("regrade folds unit c-exponents into the grade") {
  OpSeries s(Grading::Recursion);
  // mu'' c^-1 sigma.B at recursion grade 0 -> physical grade 1, mu'' unit.
  s.add(0, OpExpr::term({ExactScalar::one(), UnitVector{0, 0, 0, -1, 1}},
                        OpMonomial::with_field(Field::SigmaB)));
  // A c-free term keeps its grade.
  s.add(2, OpExpr::term({ExactScalar::one(), UnitVector{0, 0, -3, 0, 0}},
                        OpMonomial::pi_pow(4)));
  OpSeries p = regrade(s);
  CHECK(p.grading() == Grading::Physical);
  CHECK(p.at(0).empty());
  REQUIRE(p.at(1).size() == 1);
  CHECK(p.at(1).terms().begin()->first.units == kMupp);
  CHECK(!p.at(2).empty());
  // Idempotent.
  OpSeries p2 = regrade(p);
  CHECK(compare_series(p, p2, 4).equal);
}

TEST_CASE("dirac limit: mu''-free assembly") {
  OpSeries x = solve_dirac(8);
  HamiltonianSeries hd = assemble_h_dirac(x, 6, Route::Commutator);
  for (const auto& [g, e] : hd.body.entries())
    for (const auto& [key, s] : e.terms()) CHECK(key.units.mupp == 0);
}
