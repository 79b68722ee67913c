#include "fwexact/fwsolve.hpp"

#include "fwexact/sequences.hpp"

#include <stdexcept>

namespace fwexact {

namespace {

const OpExpr kZeroExpr;

OpExpr sp_expr() {
  return OpExpr::term(Coefficient::one(), OpMonomial::sigma_pi(1));
}

OpExpr sigma_e_expr() {
  return OpExpr::term(Coefficient::one(),
                      OpMonomial::with_field(Field::SigmaE));
}

OpExpr sigma_b_expr() {
  return OpExpr::term(Coefficient::one(),
                      OpMonomial::with_field(Field::SigmaB));
}

// 1/(2m)^k as an exact coefficient.
Coefficient inv_2m(int k) {
  Coefficient c{ExactScalar::real(Rational(1, BigInt(1) << k))};
  c.units.m = -k;
  return c;
}

}  // namespace

const OpExpr& OpSeries::at(int order) const {
  auto it = entries_.find(order);
  return it == entries_.end() ? kZeroExpr : it->second;
}

void OpSeries::set(int order, OpExpr e) {
  if (e.empty())
    entries_.erase(order);
  else
    entries_[order] = std::move(e);
}

void OpSeries::add(int order, const OpExpr& e) {
  if (e.empty()) return;
  auto [it, inserted] = entries_.try_emplace(order, e);
  if (!inserted) {
    it->second += e;
    if (it->second.empty()) entries_.erase(it);
  }
}

int OpSeries::max_order() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first;
}

OpSeries OpSeries::operator+(const OpSeries& o) const {
  if (grading_ != o.grading_)
    throw std::invalid_argument("OpSeries: grading mismatch in addition");
  OpSeries r = *this;
  for (const auto& [g, e] : o.entries_) r.add(g, e);
  return r;
}

OpSeries OpSeries::scaled(const Coefficient& c) const {
  OpSeries r(grading_);
  for (const auto& [g, e] : entries_) r.set(g, e.scaled(c));
  return r;
}

OpSeries series_mul(const OpSeries& u, const OpSeries& v, int max_order) {
  if (u.grading() != v.grading())
    throw std::invalid_argument("series_mul: grading mismatch");
  OpSeries r(u.grading());
  for (const auto& [g1, e1] : u.entries()) {
    if (g1 > max_order) break;
    for (const auto& [g2, e2] : v.entries()) {
      if (g1 + g2 > max_order) break;
      r.add(g1 + g2, mul(e1, e2));
    }
  }
  return r;
}

OpSeries compose_scalar_series(const std::vector<Rational>& f,
                               const OpSeries& a, int max_order) {
  if (!a.entries().empty() && a.entries().begin()->first < 1)
    throw std::invalid_argument(
        "compose_scalar_series: series must start at grade >= 1");
  OpSeries r(a.grading());
  if (!f.empty() && f[0] != 0)
    r.add(0, OpExpr::identity().scaled(
                 Coefficient{ExactScalar::real(f[0])}));
  OpSeries power(a.grading());
  power.add(0, OpExpr::identity());
  int min_grade = a.entries().empty() ? max_order + 1
                                      : a.entries().begin()->first;
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (static_cast<int>(k) * min_grade > max_order) break;
    power = series_mul(power, a, max_order);
    if (f[k] == 0) continue;
    for (const auto& [g, e] : power.entries())
      r.add(g, e.scaled(Coefficient{ExactScalar::real(f[k])}));
  }
  return r;
}

OpSeries series_commutator_phi(const OpSeries& a, int sign) {
  OpSeries r(a.grading());
  for (const auto& [g, e] : a.entries()) r.add(g, commutator_phi(e, sign));
  return r;
}

OpSeries solve_dirac(int max_order, int phi_sign) {
  if (max_order < 1) throw std::domain_error("solve_dirac: order must be >= 1");
  OpSeries x(Grading::Recursion);
  x.set(1, OpExpr::term(inv_2m(1), OpMonomial::sigma_pi(1)));
  const OpExpr sp = sp_expr();
  const Coefficient half_over_m = inv_2m(1);
  const Coefficient q_unit{ExactScalar::one(), UnitVector{0, 1, 0, 0, 0}};
  for (int n = 3; n <= max_order; ++n) {
    OpExpr rhs;
    for (int k1 = 1; k1 <= n - 2; ++k1) {
      int k2 = n - 1 - k1;
      if (x.at(k1).empty() || x.at(k2).empty()) continue;
      rhs = rhs - mul(mul(x.at(k1), sp), x.at(k2));
    }
    rhs += commutator_phi(x.at(n - 2), phi_sign).scaled(q_unit);
    x.set(n, rhs.scaled(half_over_m));
  }
  x.declare_solved_to(max_order);
  return x;
}

OpSeries closed_form_dirac(int max_order) {
  SeqTable t;
  OpSeries x(Grading::Recursion);
  const Coefficient iqhbar{ExactScalar::i(), UnitVector{1, 1, 0, 0, 0}};
  for (int j = 0; 2 * j + 1 <= max_order; ++j) {
    OpExpr e;
    ExactScalar sign = ExactScalar::of(j % 2 ? -1 : 1);
    Coefficient ca = inv_2m(2 * j + 1);
    ca.scalar = ca.scalar * sign * ExactScalar::real(Rational(t.a(j)));
    e.add_term(ca, OpMonomial::sigma_pi(2 * j + 1));
    if (j >= 1) {
      Coefficient cb = iqhbar * inv_2m(2 * j);
      cb.scalar = cb.scalar * sign * ExactScalar::real(Rational(t.b(j)));
      e.add_term(cb, OpMonomial::with_field(Field::SigmaE, 2 * j - 2));
    }
    if (j >= 2) {
      Coefficient cc = iqhbar * inv_2m(2 * j);
      cc.scalar = cc.scalar * sign * ExactScalar::real(Rational(t.c(j)));
      e.add_term(cc, OpMonomial::with_field(Field::EdotPi, 2 * j - 4, 1));
    }
    x.set(2 * j + 1, e);
  }
  x.declare_solved_to(max_order);
  return x;
}

OpSeries solve_pauli(int max_order, const OpSeries& x_dirac, int phi_sign) {
  if (max_order < 3) throw std::domain_error("solve_pauli: order must be >= 3");
  if (x_dirac.solved_to() < max_order - 1)
    throw std::invalid_argument(
        "solve_pauli: Dirac series not solved far enough");
  OpSeries xp(Grading::Recursion);
  const OpExpr sp = sp_expr();
  const OpExpr se = sigma_e_expr();
  const OpExpr sb = sigma_b_expr();
  const Coefficient half_over_m = inv_2m(1);
  const Coefficient q_unit{ExactScalar::one(), UnitVector{0, 1, 0, 0, 0}};
  const Coefficient mupp{ExactScalar::one(), UnitVector{0, 0, 0, 0, 1}};
  const Coefficient i_mupp{ExactScalar::i(), UnitVector{0, 0, 0, 0, 1}};

  xp.set(3, OpExpr::term(-(i_mupp * inv_2m(1)),
                         OpMonomial::with_field(Field::SigmaE)));
  for (int n = 4; n <= max_order; ++n) {
    OpExpr rhs;
    rhs += commutator_phi(xp.at(n - 2), phi_sign).scaled(q_unit);
    OpExpr both = x_dirac.at(n - 3) + xp.at(n - 3);
    rhs += (mul(both, sb) + mul(sb, both)).scaled(mupp);
    for (int k1 = 1; k1 <= n - 2; ++k1) {
      int k2 = n - 1 - k1;
      rhs = rhs - mul(mul(x_dirac.at(k1), sp), xp.at(k2));
      rhs = rhs - mul(mul(xp.at(k1), sp), x_dirac.at(k2));
      rhs = rhs - mul(mul(xp.at(k1), sp), xp.at(k2));
    }
    for (int k1 = 1; k1 <= n - 4; ++k1) {
      int k2 = n - 3 - k1;
      OpExpr inner = mul(mul(x_dirac.at(k1), se), x_dirac.at(k2));
      inner += mul(mul(x_dirac.at(k1), se), xp.at(k2));
      inner += mul(mul(xp.at(k1), se), x_dirac.at(k2));
      inner += mul(mul(xp.at(k1), sp), xp.at(k2));
      rhs = rhs - inner.scaled(i_mupp);
    }
    xp.set(n, rhs.scaled(half_over_m));
  }
  xp.declare_solved_to(max_order);
  return xp;
}

OpSeries closed_form_pauli(int max_order) {
  SeqTable t;
  OpSeries xp(Grading::Recursion);
  const UnitVector mupp_u{0, 0, 0, 0, 1};
  for (int j = 1; 2 * j <= max_order || 2 * j + 1 <= max_order; ++j) {
    ExactScalar sign = ExactScalar::of(j % 2 ? -1 : 1);
    if (2 * j <= max_order && j >= 2) {
      Coefficient c = inv_2m(2 * j - 2);
      c.units = c.units + mupp_u;
      c.scalar =
          c.scalar * sign * ExactScalar::real(Rational(2 * t.b(j - 1)));
      OpExpr e;
      e.add_term(c, OpMonomial::with_field(Field::BdotPi, 2 * j - 4));
      xp.set(2 * j, e);
    }
    if (2 * j + 1 <= max_order) {
      OpExpr e;
      Coefficient cb = inv_2m(2 * j - 1);
      cb.units = cb.units + mupp_u;
      cb.scalar = cb.scalar * sign * ExactScalar::i() *
                  ExactScalar::real(Rational(t.b(j)));
      e.add_term(cb, OpMonomial::with_field(Field::SigmaE, 2 * j - 2));
      if (j >= 2) {
        Coefficient cd = inv_2m(2 * j - 1);
        cd.units = cd.units + mupp_u;
        cd.scalar = cd.scalar * (-sign) * ExactScalar::i() *
                    ExactScalar::real(Rational(t.d(j)));
        e.add_term(cd, OpMonomial::with_field(Field::EdotPi, 2 * j - 4, 1));
      }
      xp.set(2 * j + 1, e);
    }
  }
  xp.declare_solved_to(max_order);
  return xp;
}

SeriesComparison compare_series(const OpSeries& u, const OpSeries& v,
                                int max_order) {
  if (u.grading() != v.grading())
    throw std::invalid_argument("compare_series: grading mismatch");
  SeriesComparison cmp{true, std::nullopt, {}};
  for (int g = 0; g <= max_order; ++g) {
    OpExpr diff = u.at(g) - v.at(g);
    if (!diff.empty()) {
      cmp.equal = false;
      if (!cmp.first_diff) cmp.first_diff = SeriesDiff{g, diff};
      cmp.all_diffs.push_back(SeriesDiff{g, std::move(diff)});
    }
  }
  return cmp;
}

namespace {

StructureCheck fail_on(int order, const OpExpr::Key& key, const ExactScalar& s,
                       const char* why) {
  return {false, "order " + std::to_string(order) + ": " +
                     Coefficient{s, key.units}.str() + " " + key.mono.str() +
                     " (" + why + ")"};
}

}  // namespace

StructureCheck check_dirac_structure(const OpSeries& x, int max_order) {
  for (int g = 1; g <= max_order; ++g) {
    const OpExpr& e = x.at(g);
    if (g % 2 == 0 && !e.empty())
      return {false, "order " + std::to_string(g) + ": even order nonzero"};
    for (const auto& [key, s] : e.terms()) {
      const OpMonomial& m = key.mono;
      if (m.phi) return fail_on(g, key, s, "phi in X");
      if (field_is_magnetic(m.field))
        return fail_on(g, key, s, "B content in X");
      if (m.field == Field::ExPiSigma)
        return fail_on(g, key, s, "(Expi).sigma in X");
      if (m.field == Field::None && (m.sp % 2 == 0 || m.pi != 0))
        return fail_on(g, key, s, "field-free term not an odd sigma.pi power");
    }
  }
  return {true, ""};
}

StructureCheck check_pauli_structure(const OpSeries& xp, int max_order) {
  for (int g = 1; g <= max_order; ++g) {
    for (const auto& [key, s] : xp.at(g).terms()) {
      const OpMonomial& m = key.mono;
      if (m.field == Field::None)
        return fail_on(g, key, s, "X' term without a field factor");
      if (key.units.mupp != 1)
        return fail_on(g, key, s, "X' term not linear in mu''");
      if (g % 2 == 0 && m.field != Field::BdotPi)
        return fail_on(g, key, s, "even X' order not (B.pi)-linear");
      if (g % 2 == 1 && !field_is_electric(m.field))
        return fail_on(g, key, s, "odd X' order not E-linear");
    }
  }
  return {true, ""};
}

StructureCheck check_x_dimensionless(const OpSeries& x, int max_order) {
  const Dimension c_dim = Dimension::velocity();
  for (int g = 0; g <= max_order; ++g) {
    for (const auto& [key, s] : x.at(g).terms()) {
      Dimension d = dimension_of({s, key.units}, key.mono.content());
      if (!(d == c_dim * g))
        return fail_on(g, key, s, "not dimensionless at its grade");
    }
  }
  return {true, ""};
}

}  // namespace fwexact
