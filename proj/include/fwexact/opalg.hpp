#pragma once

#include "fwexact/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fwexact {

/// Field factor of a canonical monomial; at most one per monomial (weak-field
/// truncation: anything bilinear in E/B is dropped).
enum class Field : std::uint8_t {
  None,
  SigmaE,     // sigma.E
  SigmaB,     // sigma.B
  EdotPi,     // E.pi
  BdotPi,     // B.pi
  ExPiSigma,  // (E x pi).sigma
  BxPiSigma,  // (B x pi).sigma
};

const char* field_name(Field f);
bool field_is_electric(Field f);
bool field_is_magnetic(Field f);

/// Canonical monomial pi^{pi} (sigma.pi)^{sp} [field], with an optional bare
/// phi. Operator order is pi-power, then sigma.pi power, then the field
/// factor. Grammar:
///   field None:            sp unrestricted (atomic), pi even
///   field E.pi / B.pi:     sp <= 1
///   other fields:          sp == 0
///   phi:                   only on the bare monomial, never in products
struct OpMonomial {
  int sp = 0;
  int pi = 0;
  Field field = Field::None;
  bool phi = false;

  static OpMonomial unit() { return {}; }
  static OpMonomial sigma_pi(int k) { return {k, 0, Field::None, false}; }
  static OpMonomial pi_pow(int even_power) {
    return {0, even_power, Field::None, false};
  }
  static OpMonomial with_field(Field f, int pi_power = 0, int sp_power = 0) {
    return {sp_power, pi_power, f, false};
  }
  static OpMonomial phi_mono() { return {0, 0, Field::None, true}; }

  bool valid() const;
  bool is_field_linear() const { return field != Field::None; }
  OperatorContent content() const;

  auto operator<=>(const OpMonomial&) const = default;
  std::string str() const;
};

/// Canonical finite linear combination of monomials. Terms are keyed by
/// (monomial, unit vector): the same monomial may appear under different unit
/// monomials (e.g. a mu'' term and a q*hbar term on sigma.B) and those never
/// merge. No zero coefficients are stored.
class OpExpr {
 public:
  struct Key {
    OpMonomial mono;
    UnitVector units;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, ExactScalar>;

  OpExpr() = default;

  static OpExpr zero() { return {}; }
  static OpExpr term(Coefficient c, OpMonomial m);
  static OpExpr identity() {
    return term(Coefficient::one(), OpMonomial::unit());
  }

  void add_term(const Coefficient& c, const OpMonomial& m);
  OpExpr& operator+=(const OpExpr& o);
  OpExpr operator+(const OpExpr& o) const;
  OpExpr operator-(const OpExpr& o) const;
  OpExpr scaled(const Coefficient& c) const;
  OpExpr scaled(const ExactScalar& s) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool operator==(const OpExpr& o) const { return terms_ == o.terms_; }

  bool contains_phi() const;
  std::string str() const;

 private:
  TermMap terms_;
};

/// Canonical product under the weak-field homogeneous-field calculus:
/// field-bilinear terms drop, (sigma.pi)^2 reduces to pi^2 inside the
/// field-linear sector, and the exact field-linear reordering correction
/// [ (sigma.pi)^k, pi^{2n} ] = -2n (i q hbar / c) pi^{2n+k-3} (Bxpi).sigma
/// (odd k) is carried in the field-free sector. Throws if an operand
/// contains phi (use commutator_phi).
OpExpr mul(const OpExpr& x, const OpExpr& y);

/// [phi, x] from the primitive [phi, pi_i] = sign * i*hbar * E_i applied by
/// the product rule. Field-linear monomials and phi itself map to zero.
OpExpr commutator_phi(const OpExpr& x, int sign = -1);

/// Hermitian adjoint: coefficients conjugated; monomials reverse to
/// themselves except the mixed field-free pi^{2n}(sigma.pi)^{odd} case,
/// which picks up the exact (Bxpi).sigma reordering correction.
OpExpr dagger(const OpExpr& x);

/// Expands atomic (sigma.pi)^k (k >= 2) in field-free terms via
/// (sigma.pi)^2 = pi^2 - (q hbar / c) sigma.B, to linear order in B. Emitted
/// sigma.B-sector terms carry an explicit c^{-1} in their units.
OpExpr expand_sigma_pi(const OpExpr& x);

struct HermiticityResult {
  bool hermitian;
  OpExpr residue;  // (x - dagger(x)) / 2
};

HermiticityResult is_hermitian(const OpExpr& x);

}  // namespace fwexact
