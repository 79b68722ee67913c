#include "fwexact/opalg.hpp"

#include <stdexcept>

namespace fwexact {

const char* field_name(Field f) {
  switch (f) {
    case Field::None: return "none";
    case Field::SigmaE: return "sigmaE";
    case Field::SigmaB: return "sigmaB";
    case Field::EdotPi: return "EdotPi";
    case Field::BdotPi: return "BdotPi";
    case Field::ExPiSigma: return "ExPiSigma";
    case Field::BxPiSigma: return "BxPiSigma";
  }
  return "?";
}

bool field_is_electric(Field f) {
  return f == Field::SigmaE || f == Field::EdotPi || f == Field::ExPiSigma;
}

bool field_is_magnetic(Field f) {
  return f == Field::SigmaB || f == Field::BdotPi || f == Field::BxPiSigma;
}

bool OpMonomial::valid() const {
  if (sp < 0 || pi < 0 || pi % 2 != 0) return false;
  if (phi) return sp == 0 && pi == 0 && field == Field::None;
  switch (field) {
    case Field::None: return true;
    case Field::EdotPi:
    case Field::BdotPi: return sp <= 1;
    default: return sp == 0;
  }
}

OperatorContent OpMonomial::content() const {
  OperatorContent c;
  c.pi_power = pi + sp;
  switch (field) {
    case Field::EdotPi:
    case Field::BdotPi:
    case Field::ExPiSigma:
    case Field::BxPiSigma: c.pi_power += 1; break;
    default: break;
  }
  c.e_count = field_is_electric(field) ? 1 : 0;
  c.b_count = field_is_magnetic(field) ? 1 : 0;
  c.phi = phi;
  return c;
}

std::string OpMonomial::str() const {
  if (phi) return "phi";
  std::string out;
  auto piece = [&out](const std::string& s) {
    if (!out.empty()) out += " ";
    out += s;
  };
  if (pi > 0) piece("pi^" + std::to_string(pi));
  if (sp == 1) piece("(s.pi)");
  if (sp > 1) piece("(s.pi)^" + std::to_string(sp));
  switch (field) {
    case Field::None: break;
    case Field::SigmaE: piece("(s.E)"); break;
    case Field::SigmaB: piece("(s.B)"); break;
    case Field::EdotPi: piece("(E.pi)"); break;
    case Field::BdotPi: piece("(B.pi)"); break;
    case Field::ExPiSigma: piece("(ExPi.s)"); break;
    case Field::BxPiSigma: piece("(BxPi.s)"); break;
  }
  if (out.empty()) out = "1";
  return out;
}

OpExpr OpExpr::term(Coefficient c, OpMonomial m) {
  OpExpr e;
  e.add_term(c, m);
  return e;
}

void OpExpr::add_term(const Coefficient& c, const OpMonomial& m) {
  if (!m.valid())
    throw std::logic_error("OpExpr: monomial outside the canonical grammar: " +
                           m.str());
  if (c.is_zero()) return;
  Key key{m, c.units};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c.scalar);
    return;
  }
  it->second += c.scalar;
  if (it->second.is_zero()) terms_.erase(it);
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
  for (const auto& [key, scalar] : o.terms_)
    add_term({scalar, key.units}, key.mono);
  return *this;
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
  OpExpr r = *this;
  r += o;
  return r;
}

OpExpr OpExpr::operator-(const OpExpr& o) const {
  OpExpr r = *this;
  for (const auto& [key, scalar] : o.terms_)
    r.add_term({-scalar, key.units}, key.mono);
  return r;
}

OpExpr OpExpr::scaled(const Coefficient& c) const {
  OpExpr r;
  if (c.is_zero()) return r;
  for (const auto& [key, scalar] : terms_)
    r.add_term({scalar * c.scalar, key.units + c.units}, key.mono);
  return r;
}

OpExpr OpExpr::scaled(const ExactScalar& s) const {
  return scaled(Coefficient{s});
}

bool OpExpr::contains_phi() const {
  for (const auto& [key, scalar] : terms_)
    if (key.mono.phi) return true;
  return false;
}

std::string OpExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, scalar] : terms_) {
    if (!out.empty()) out += "  +  ";
    Coefficient c{scalar, key.units};
    out += "[" + c.str() + "] " + key.mono.str();
  }
  return out;
}

namespace {

struct MonoTerm {
  ExactScalar scalar;
  UnitVector units;
  OpMonomial mono;
};

const ExactScalar kI = ExactScalar::i();
const ExactScalar kMinusI = -ExactScalar::i();
const UnitVector kQHbarOverC{1, 1, 0, -1, 0};  // hbar q c^-1

Field sigma_field_of(Field f) {
  return field_is_electric(f) ? Field::SigmaE : Field::SigmaB;
}
Field dot_field_of(Field f) {
  return field_is_electric(f) ? Field::EdotPi : Field::BdotPi;
}
Field cross_field_of(Field f) {
  return field_is_electric(f) ? Field::ExPiSigma : Field::BxPiSigma;
}

// (sigma.pi)^k attached to a field monomial whose pi power is pi0; the field
// sector reduces (sigma.pi)^2 to pi^2, so only k's parity survives.
// `sp_on_left` tells whether the sigma.pi string sits left of the field
// structure.
void attach_sp(std::vector<MonoTerm>& out, int k, bool sp_on_left,
               Field field, int field_sp, int pi0) {
  switch (field) {
    case Field::EdotPi:
    case Field::BdotPi: {
      // Scalar field factor: sigma.pi powers combine regardless of side.
      int s = field_sp + k;
      int sp_rem = s % 2;
      out.push_back({ExactScalar::one(), {},
                     OpMonomial::with_field(field, pi0 + s - sp_rem, sp_rem)});
      return;
    }
    case Field::SigmaE:
    case Field::SigmaB: {
      if (k % 2 == 0) {
        out.push_back(
            {ExactScalar::one(), {}, OpMonomial::with_field(field, pi0 + k)});
        return;
      }
      int p = pi0 + k - 1;
      // sigma.pi * sigma.F = F.pi - i (Fxpi).sigma ; reversed order flips i.
      ExactScalar cross = sp_on_left ? kMinusI : kI;
      out.push_back({ExactScalar::one(), {},
                     OpMonomial::with_field(dot_field_of(field), p)});
      out.push_back(
          {cross, {}, OpMonomial::with_field(cross_field_of(field), p)});
      return;
    }
    case Field::ExPiSigma:
    case Field::BxPiSigma: {
      if (k % 2 == 0) {
        out.push_back(
            {ExactScalar::one(), {}, OpMonomial::with_field(field, pi0 + k)});
        return;
      }
      int p = pi0 + k - 1;
      // sigma.pi * (Fxpi).sigma = i [ pi^2 sigma.F - (sigma.pi)(F.pi) ];
      // the reversed order carries the opposite sign.
      ExactScalar lead = sp_on_left ? kI : kMinusI;
      out.push_back(
          {lead, {}, OpMonomial::with_field(sigma_field_of(field), p + 2)});
      out.push_back(
          {-lead, {}, OpMonomial::with_field(dot_field_of(field), p, 1)});
      return;
    }
    case Field::None: break;
  }
  throw std::logic_error("attach_sp: field-free input");
}

std::vector<MonoTerm> mul_monomial(const OpMonomial& m1, const OpMonomial& m2) {
  if (m1.phi || m2.phi)
    throw std::invalid_argument(
        "opalg::mul: phi factors enter only via commutator_phi");
  bool f1 = m1.is_field_linear();
  bool f2 = m2.is_field_linear();
  std::vector<MonoTerm> out;
  if (f1 && f2) return out;  // weak-field truncation

  if (!f1 && !f2) {
    out.push_back({ExactScalar::one(),
                   {},
                   OpMonomial{m1.sp + m2.sp, m1.pi + m2.pi, Field::None,
                              false}});
    // Exact reordering of (sigma.pi)^{k1} past pi^{2n2}: field-linear for
    // odd k1, [ (sigma.pi)^k, pi^{2n} ] = -2n (iq hbar/c) pi^{2n+k-3} W.
    if (m1.sp % 2 == 1 && m2.pi > 0) {
      int P = m1.pi + m2.pi + m1.sp - 3;
      ExactScalar c0 = kMinusI * ExactScalar::of(m2.pi);
      int k2 = m2.sp;
      if (k2 % 2 == 0) {
        out.push_back({c0, kQHbarOverC,
                       OpMonomial::with_field(Field::BxPiSigma, P + k2)});
      } else {
        // W (sigma.pi)^{k2} = -i pi^{k2+1} sigma.B + i pi^{k2-1}
        // (sigma.pi)(B.pi), times pi^P.
        out.push_back({c0 * kMinusI, kQHbarOverC,
                       OpMonomial::with_field(Field::SigmaB, P + k2 + 1)});
        out.push_back({c0 * kI, kQHbarOverC,
                       OpMonomial::with_field(Field::BdotPi, P + k2 - 1, 1)});
      }
    }
    return out;
  }

  // Exactly one field factor.
  const OpMonomial& fm = f1 ? m1 : m2;
  const OpMonomial& fs = f1 ? m2 : m1;
  int pi0 = m1.pi + m2.pi;
  // Field structure on the left means the free sigma.pi string multiplies
  // from the right.
  attach_sp(out, fs.sp, /*sp_on_left=*/!f1, fm.field, fm.sp, pi0);
  return out;
}

}  // namespace

OpExpr mul(const OpExpr& x, const OpExpr& y) {
  OpExpr r;
  for (const auto& [k1, s1] : x.terms()) {
    for (const auto& [k2, s2] : y.terms()) {
      ExactScalar s = s1 * s2;
      UnitVector u = k1.units + k2.units;
      for (const MonoTerm& t : mul_monomial(k1.mono, k2.mono))
        r.add_term({s * t.scalar, u + t.units}, t.mono);
    }
  }
  return r;
}

namespace {

// [phi, (sigma.pi)^k] built recursively from the primitive
// [phi, sigma.pi] = sign * i*hbar * sigma.E via the product rule.
OpExpr comm_phi_sp_power(int k, int sign) {
  OpExpr sp1 = OpExpr::term(Coefficient::one(), OpMonomial::sigma_pi(1));
  OpExpr c1 = OpExpr::term(
      {ExactScalar::imag(sign), UnitVector{1, 0, 0, 0, 0}},
      OpMonomial::with_field(Field::SigmaE));
  if (k <= 0) return OpExpr::zero();
  OpExpr acc = c1;
  OpExpr sp_power = sp1;
  for (int n = 2; n <= k; ++n) {
    // [phi, sp^n] = [phi, sp] sp^{n-1} + sp [phi, sp^{n-1}]
    acc = mul(c1, sp_power) + mul(sp1, acc);
    sp_power = mul(sp_power, sp1);
  }
  return acc;
}

OpExpr shifted_pi(const OpExpr& e, int dpi) {
  if (dpi == 0) return e;
  OpExpr r;
  for (const auto& [key, scalar] : e.terms()) {
    OpMonomial m = key.mono;
    m.pi += dpi;
    r.add_term({scalar, key.units}, m);
  }
  return r;
}

}  // namespace

OpExpr commutator_phi(const OpExpr& x, int sign) {
  OpExpr r;
  for (const auto& [key, scalar] : x.terms()) {
    const OpMonomial& m = key.mono;
    if (m.phi || m.is_field_linear()) continue;  // bilinear or [phi,phi]
    Coefficient c{scalar, key.units};
    if (m.pi > 0) {
      // [phi, pi^{2n}] (sigma.pi)^k = sign * 2n*i*hbar pi^{2n-2} (E.pi)
      // (sigma.pi)^k with the trailing sigma.pi string folded in.
      int sp_rem = m.sp % 2;
      OpMonomial out =
          OpMonomial::with_field(Field::EdotPi,
                                 m.pi - 2 + (m.sp - sp_rem), sp_rem);
      r.add_term({c.scalar * ExactScalar::imag(sign * m.pi),
                  c.units + UnitVector{1, 0, 0, 0, 0}},
                 out);
    }
    if (m.sp > 0)
      r += shifted_pi(comm_phi_sp_power(m.sp, sign), m.pi).scaled(c);
  }
  return r;
}

OpExpr dagger(const OpExpr& x) {
  OpExpr r;
  for (const auto& [key, scalar] : x.terms()) {
    const OpMonomial& m = key.mono;
    ExactScalar s = scalar.conj();
    r.add_term({s, key.units}, m);
    // Reversal correction for mixed field-free monomials:
    // (pi^{2n}(sigma.pi)^k)^dag = pi^{2n}(sigma.pi)^k
    //   - 2n (iq hbar/c) pi^{2n+k-3} (Bxpi).sigma   (odd k).
    if (m.field == Field::None && !m.phi && m.sp % 2 == 1 && m.pi > 0) {
      r.add_term({s * ExactScalar::imag(-m.pi), key.units + kQHbarOverC},
                 OpMonomial::with_field(Field::BxPiSigma, m.pi + m.sp - 3));
    }
  }
  return r;
}

OpExpr expand_sigma_pi(const OpExpr& x) {
  OpExpr r;
  for (const auto& [key, scalar] : x.terms()) {
    const OpMonomial& m = key.mono;
    if (m.field != Field::None || m.phi || m.sp < 2) {
      r.add_term({scalar, key.units}, m);
      continue;
    }
    int j = m.sp / 2;
    UnitVector u = key.units + kQHbarOverC;
    ExactScalar sj = scalar * ExactScalar::of(-j);
    if (m.sp % 2 == 0) {
      // (sigma.pi)^{2j} = pi^{2j} - j (q hbar/c) pi^{2j-2} sigma.B
      r.add_term({scalar, key.units}, OpMonomial::pi_pow(m.pi + m.sp));
      r.add_term({sj, u}, OpMonomial::with_field(Field::SigmaB, m.pi + m.sp - 2));
    } else {
      // (sigma.pi)^{2j+1} = pi^{2j} sigma.pi
      //   - j (q hbar/c) pi^{2j-2} ( B.pi + i (Bxpi).sigma )
      r.add_term({scalar, key.units},
                 OpMonomial{1, m.pi + m.sp - 1, Field::None, false});
      r.add_term({sj, u}, OpMonomial::with_field(Field::BdotPi, m.pi + m.sp - 3));
      r.add_term({sj * kI, u},
                 OpMonomial::with_field(Field::BxPiSigma, m.pi + m.sp - 3));
    }
  }
  return r;
}

HermiticityResult is_hermitian(const OpExpr& x) {
  OpExpr residue = (x - dagger(x)).scaled(ExactScalar::of(1, 2));
  return {residue.empty(), residue};
}

}  // namespace fwexact
