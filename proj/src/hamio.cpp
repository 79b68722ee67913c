#include "fwexact/hamio.hpp"

#include "fwexact/fps.hpp"
#include "fwexact/sequences.hpp"

#include <stdexcept>

namespace fwexact {

namespace {

const UnitVector kQ{0, 1, 0, 0, 0};
const UnitVector kQHbar{1, 1, 0, 0, 0};
const UnitVector kMupp{0, 0, 0, 0, 1};

OpExpr sp_expr() {
  return OpExpr::term(Coefficient::one(), OpMonomial::sigma_pi(1));
}

OpExpr q_phi_expr() {
  return OpExpr::term({ExactScalar::one(), kQ}, OpMonomial::phi_mono());
}

std::vector<Rational> binomial_coeffs(const Rational& r, int count) {
  std::vector<Rational> out(count);
  for (int k = 0; k < count; ++k) out[k] = binomial(r, k);
  return out;
}

void capture_edotpi(AssemblyBreakdown* breakdown, const std::string& source,
                    const OpSeries& s, int max_order) {
  if (!breakdown) return;
  for (const auto& [g, e] : s.entries()) {
    if (g > max_order) break;
    OpExpr captured;
    for (const auto& [key, scalar] : e.terms())
      if (key.mono.field == Field::EdotPi)
        captured.add_term({scalar, key.units}, key.mono);
    if (!captured.empty()) breakdown->edotpi_by_grade[g][source] = captured;
  }
}

// mu''^e carries e units of c hidden in mu'' = c mu'; exposing them would
// double-count since the assembly already placed mu'' terms at their mu'
// grade. Only explicit c exponents fold.
int physical_grade(int grade, const UnitVector& u) { return grade - u.c; }

}  // namespace

OpSeries xdag_x(const OpSeries& x, int max_order) {
  OpSeries a(x.grading());
  for (const auto& [j1, e1] : x.entries()) {
    if (j1 > max_order) break;
    OpExpr d1 = dagger(e1);
    for (const auto& [j2, e2] : x.entries()) {
      if (j1 + j2 > max_order) break;
      a.add(j1 + j2, mul(d1, e2));
    }
  }
  return a;
}

HamiltonianSeries assemble_h_dirac(const OpSeries& x, int max_order,
                                   Route route, int phi_sign,
                                   AssemblyBreakdown* breakdown) {
  if (x.solved_to() >= 0 && x.solved_to() < max_order + 1)
    throw std::invalid_argument(
        "assemble_h_dirac: X not solved far enough");
  const Coefficient q_unit{ExactScalar::one(), kQ};

  OpSeries k_series(x.grading());
  const OpExpr sp = sp_expr();
  for (const auto& [j, e] : x.entries()) {
    if (j - 1 > max_order) break;
    k_series.add(j - 1, mul(sp, e));
  }

  OpSeries a = xdag_x(x, max_order);
  OpSeries comm_aq =
      series_commutator_phi(a, phi_sign).scaled(q_unit);

  int n_coeffs = max_order / 2 + 2;
  HamiltonianSeries h;
  h.rest_energy = true;
  h.body.add(0, q_phi_expr());

  if (route == Route::Commutator) {
    OpSeries inv = compose_scalar_series(
        binomial_coeffs(Rational(-1), n_coeffs), a, max_order);
    OpSeries comm_term =
        series_mul(comm_aq, inv, max_order)
            .scaled(Coefficient{ExactScalar::of(-1, 2)});
    capture_edotpi(breakdown, "c_sp_X", k_series, max_order);
    capture_edotpi(breakdown, "phi_commutator", comm_term, max_order);
    h.body = h.body + k_series + comm_term;
  } else {
    OpSeries s_minus = compose_scalar_series(
        binomial_coeffs(Rational(-1, 2), n_coeffs), a, max_order);
    OpSeries s_plus = compose_scalar_series(
        binomial_coeffs(Rational(1, 2), n_coeffs), a, max_order);
    std::vector<Rational> gprime = binomial_coeffs(Rational(-1, 2), n_coeffs);
    for (Rational& r : gprime) r /= 2;
    OpSeries gp = compose_scalar_series(gprime, a, max_order);
    OpSeries sandwich =
        series_mul(s_plus, series_mul(k_series, s_minus, max_order),
                   max_order);
    OpSeries comm_term =
        series_mul(series_mul(gp, comm_aq, max_order), s_minus, max_order)
            .scaled(Coefficient{ExactScalar::of(-1)});
    capture_edotpi(breakdown, "c_sp_X", sandwich, max_order);
    capture_edotpi(breakdown, "phi_commutator", comm_term, max_order);
    h.body = h.body + sandwich + comm_term;
  }
  return h;
}

HamiltonianSeries assemble_h_pauli(const OpSeries& x, const OpSeries& xp,
                                   int max_order,
                                   AssemblyBreakdown* breakdown) {
  HamiltonianSeries h;
  h.rest_energy = false;
  const OpExpr sp = sp_expr();
  const OpExpr se = OpExpr::term(Coefficient::one(),
                                 OpMonomial::with_field(Field::SigmaE));
  const Coefficient i_mupp{ExactScalar::i(), kMupp};

  OpSeries from_xp(xp.grading());
  for (const auto& [j, e] : xp.entries()) {
    if (j - 1 > max_order) break;
    from_xp.add(j - 1, mul(sp, e));
  }
  OpSeries from_x(x.grading());
  for (const auto& [j, e] : x.entries()) {
    if (j + 1 > max_order) break;
    from_x.add(j + 1, mul(se, e).scaled(i_mupp));
  }
  capture_edotpi(breakdown, "c_sp_Xprime", from_xp, max_order);
  capture_edotpi(breakdown, "i_mu_sigmaE_X", from_x, max_order);

  h.body = h.body + from_xp + from_x;
  h.body.add(1, OpExpr::term({-ExactScalar::one(), kMupp},
                             OpMonomial::with_field(Field::SigmaB)));
  return h;
}

namespace {

// Emits coeff_series[n] * pi^{2n} [mono] with units base_units * m^{-(2n+dm)}
// at grade 2n+g0, up to max_order.
void emit_structure(HamiltonianSeries& h, const FPS& coeff_series,
                    OpMonomial mono, const ExactScalar& scale,
                    UnitVector base_units, int m_offset, int grade_offset,
                    int max_order) {
  // All structure functions are even in x; odd powers of |pi| never occur.
  for (int k = 1; k <= coeff_series.order(); k += 2)
    if (coeff_series[k] != 0)
      throw std::logic_error("emit_structure: odd |pi| power");
  for (int n = 0; 2 * n <= coeff_series.order(); ++n) {
    int grade = 2 * n + grade_offset;
    if (grade > max_order) break;
    if (coeff_series[2 * n] == 0) continue;
    OpMonomial m = mono;
    m.pi += 2 * n;
    UnitVector u = base_units;
    u.m -= 2 * n + m_offset;
    h.body.add(grade, OpExpr::term(
                          {scale * ExactScalar::real(coeff_series[2 * n]), u},
                          m));
  }
}

void emit_orbital_and_potential(HamiltonianSeries& h, int max_order) {
  h.rest_energy = true;
  h.body.add(0, q_phi_expr());
  int fps_order = max_order + 2;
  FPS gamma = gamma_series(fps_order);
  for (int n = 1; 2 * n - 2 <= max_order; ++n) {
    UnitVector u;
    u.m = 1 - 2 * n;
    h.body.add(2 * n - 2,
               OpExpr::term({ExactScalar::real(gamma[2 * n]), u},
                            OpMonomial::pi_pow(2 * n)));
  }
}

}  // namespace

ClosedFormTarget closed_form_target(HamKind kind, int fps_order) {
  ClosedFormTarget t;
  FPS zero(fps_order);
  FPS inv_gamma = inv_gamma_series(fps_order);
  FPS bracket = inv_gamma - inv_one_plus_gamma_series(fps_order);
  bool dirac = kind == HamKind::Dirac || kind == HamKind::Total;
  bool pauli = kind == HamKind::Pauli || kind == HamKind::Total;
  t.orbital = dirac ? gamma_series(fps_order) : zero;
  t.sigma_b_dirac = dirac ? inv_gamma : zero;
  t.ex_pi_dirac = dirac ? bracket : zero;
  t.sigma_b_moment = pauli ? FPS::constant(Rational(1), fps_order) : zero;
  t.b_dot_pi_moment = pauli ? bracket : zero;
  t.ex_pi_moment = pauli ? inv_gamma : zero;
  return t;
}

HamiltonianSeries closed_form_h(HamKind kind, int max_order) {
  if (max_order < 2)
    throw std::domain_error("closed_form_h: order must be >= 2");
  HamiltonianSeries h(Grading::Physical);
  ClosedFormTarget t = closed_form_target(kind, max_order + 2);

  if (kind == HamKind::Dirac || kind == HamKind::Total) {
    emit_orbital_and_potential(h, max_order);
    // -(q hbar/2mc)(1/gamma) s.B
    emit_structure(h, t.sigma_b_dirac.scaled(Rational(-1, 2)),
                   OpMonomial::with_field(Field::SigmaB), ExactScalar::one(),
                   kQHbar, 1, 1, max_order);
    // +(q hbar/2mc)(1/gamma - 1/(1+gamma)) sigma.(pi/mc x E)
    //   = -(q hbar/2)(...) pi^{2n} (Expi).sigma / m^{2n+2} at grade 2n+2
    emit_structure(h, t.ex_pi_dirac.scaled(Rational(-1, 2)),
                   OpMonomial::with_field(Field::ExPiSigma), ExactScalar::one(),
                   kQHbar, 2, 2, max_order);
  }
  if (kind == HamKind::Pauli || kind == HamKind::Total) {
    // -mu' sigma.B, undressed.
    emit_structure(h, t.sigma_b_moment.scaled(Rational(-1)),
                   OpMonomial::with_field(Field::SigmaB), ExactScalar::one(),
                   kMupp, 0, 1, max_order);
    // +mu'(1/gamma - 1/(1+gamma)) (s.pi)(pi/mc . B): grade 2n+3
    emit_structure(h, t.b_dot_pi_moment,
                   OpMonomial::with_field(Field::BdotPi, 0, 1),
                   ExactScalar::one(), kMupp, 2, 3, max_order);
    // +mu'(1/gamma) sigma.(pi/mc x E): grade 2n+2
    emit_structure(h, t.ex_pi_moment.scaled(Rational(-1)),
                   OpMonomial::with_field(Field::ExPiSigma), ExactScalar::one(),
                   kMupp, 1, 2, max_order);
  }
  return h;
}

HamiltonianSeries classical_h(int max_order, const Rational& gamma_m_factor) {
  if (max_order < 2)
    throw std::domain_error("classical_h: order must be >= 2");
  HamiltonianSeries h(Grading::Physical);
  emit_orbital_and_potential(h, max_order);

  int fps_order = max_order + 2;
  FPS gamma = gamma_series(fps_order);
  FPS inv_gamma = gamma.reciprocal();
  FPS one_plus_gamma = gamma;
  one_plus_gamma[0] += 1;
  FPS inv_gg = (gamma * one_plus_gamma).reciprocal();

  // H_spin = -s.[ (gamma'_m + (q/mc)(1/gamma)) B
  //              - gamma'_m (1/(gamma(1+gamma))) (pi/mc . B)(pi/mc)
  //              - (gamma'_m/gamma + (q/mc)(1/(gamma(1+gamma)))) (pi/mc x E) ]
  // with s = (hbar/2) sigma and gamma'_m = gamma_m_factor * 2 mu''/(hbar c).
  ExactScalar gm = ExactScalar::real(gamma_m_factor);

  // s.B block: -(hbar/2) gamma'_m = -gamma_m_factor mu''/c -> grade 1.
  if (max_order >= 1 && gamma_m_factor != 0)
    h.body.add(1, OpExpr::term({-gm, kMupp},
                               OpMonomial::with_field(Field::SigmaB)));
  emit_structure(h, inv_gamma.scaled(Rational(-1, 2)),
                 OpMonomial::with_field(Field::SigmaB), ExactScalar::one(),
                 kQHbar, 1, 1, max_order);

  // (pi.B)(s.pi) block: +(hbar/2) gamma'_m / (gamma(1+gamma)) / (mc)^{2n+2}.
  if (gamma_m_factor != 0)
    emit_structure(h, inv_gg, OpMonomial::with_field(Field::BdotPi, 0, 1), gm,
                   kMupp, 2, 3, max_order);

  // (pi x E) block: sigma.(pi x E) = -(Expi).sigma.
  if (gamma_m_factor != 0)
    emit_structure(h, inv_gamma.scaled(Rational(-1)),
                   OpMonomial::with_field(Field::ExPiSigma), gm, kMupp, 1, 2,
                   max_order);
  emit_structure(h, inv_gg.scaled(Rational(-1, 2)),
                 OpMonomial::with_field(Field::ExPiSigma), ExactScalar::one(),
                 kQHbar, 2, 2, max_order);
  return h;
}

OpSeries regrade(const OpSeries& s) {
  OpSeries r(Grading::Physical);
  for (const auto& [g, e] : s.entries()) {
    for (const auto& [key, scalar] : e.terms()) {
      UnitVector u = key.units;
      int pg = physical_grade(g, u);
      u.c = 0;
      r.add(pg, OpExpr::term({scalar, u}, key.mono));
    }
  }
  return r;
}

HamiltonianSeries regrade(const HamiltonianSeries& h) {
  HamiltonianSeries r(Grading::Physical);
  r.rest_energy = h.rest_energy;
  r.body = regrade(h.body);
  return r;
}

HamiltonianSeries physicalize(const HamiltonianSeries& h) {
  HamiltonianSeries e(h.body.grading());
  e.rest_energy = h.rest_energy;
  for (const auto& [g, expr] : h.body.entries())
    e.body.set(g, expand_sigma_pi(expr));
  return regrade(e);
}

HamiltonianSeries ham_sum(const HamiltonianSeries& a,
                          const HamiltonianSeries& b) {
  HamiltonianSeries r(a.body.grading());
  r.body = a.body + b.body;
  r.rest_energy = a.rest_energy || b.rest_energy;
  return r;
}

SeriesComparison compare_hamiltonians(const HamiltonianSeries& u,
                                      const HamiltonianSeries& v,
                                      int max_order) {
  SeriesComparison cmp = compare_series(u.body, v.body, max_order);
  if (u.rest_energy != v.rest_energy) {
    cmp.equal = false;
    OpExpr marker = OpExpr::term(
        {ExactScalar::of(u.rest_energy ? 1 : -1),
         UnitVector{0, 0, 1, 2, 0}},
        OpMonomial::unit());
    SeriesDiff diff{-2, marker};
    cmp.all_diffs.insert(cmp.all_diffs.begin(), diff);
    if (!cmp.first_diff || cmp.first_diff->order > -2) cmp.first_diff = diff;
  }
  return cmp;
}

StructureCheck check_hermiticity(const HamiltonianSeries& h, int max_order) {
  for (int g = 0; g <= max_order; ++g) {
    HermiticityResult r = is_hermitian(h.body.at(g));
    if (!r.hermitian)
      return {false, "order " + std::to_string(g) +
                         ": antihermitian residue " + r.residue.str()};
  }
  return {true, ""};
}

StructureCheck check_energy_dimension(const HamiltonianSeries& h,
                                      int max_order) {
  const Dimension c_dim = Dimension::velocity();
  for (int g = 0; g <= max_order; ++g) {
    for (const auto& [key, s] : h.body.at(g).terms()) {
      Dimension want = Dimension::energy() + c_dim * g;
      Dimension got = dimension_of({s, key.units}, key.mono.content());
      if (!(got == want))
        return {false, "order " + std::to_string(g) + ": " + key.mono.str() +
                           " has dimension " + got.str() + ", expected " +
                           want.str()};
    }
  }
  return {true, ""};
}

StructureCheck check_structure_purity(const HamiltonianSeries& h,
                                      int max_order) {
  for (int g = 0; g <= max_order; ++g) {
    for (const auto& [key, s] : h.body.at(g).terms()) {
      const OpMonomial& m = key.mono;
      bool ok = false;
      if (m.phi) ok = true;
      else if (m.field == Field::None) ok = m.sp == 0;
      else if (m.field == Field::SigmaB) ok = m.sp == 0;
      else if (m.field == Field::BdotPi) ok = m.sp == 1;
      else if (m.field == Field::ExPiSigma) ok = m.sp == 0;
      if (!ok)
        return {false, "order " + std::to_string(g) + ": forbidden structure " +
                           Coefficient{s, key.units}.str() + " " + m.str()};
    }
  }
  return {true, ""};
}

QuantumClassicalResult compare_quantum_classical(int max_order, int phi_sign) {
  OpSeries x = solve_dirac(max_order + 2, phi_sign);
  HamiltonianSeries hd =
      assemble_h_dirac(x, max_order, Route::Commutator, phi_sign);
  HamiltonianSeries hd_phys = physicalize(hd);
  QuantumClassicalResult out{
      compare_hamiltonians(hd_phys, classical_h(max_order, Rational(0)),
                           max_order),
      {}};

  OpSeries xp = solve_pauli(max_order + 1, x, phi_sign);
  HamiltonianSeries hp = assemble_h_pauli(x, xp, max_order);
  HamiltonianSeries total_phys = physicalize(ham_sum(hd, hp));
  out.pauli = compare_hamiltonians(total_phys,
                                   classical_h(max_order, Rational(1)),
                                   max_order);
  return out;
}

}  // namespace fwexact
