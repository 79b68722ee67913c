#pragma once

#include "fwexact/opalg.hpp"
#include "fwexact/scalars.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fwexact {

enum class Grading {
  Recursion,  // grade = recursion index of c^{-j}; units carry no c for X
  Physical,   // grade = net power of 1/c after folding unit c-exponents
};

/// Graded series in powers of 1/c with OpExpr coefficients.
class OpSeries {
 public:
  explicit OpSeries(Grading g = Grading::Recursion) : grading_(g) {}

  Grading grading() const { return grading_; }
  void set_grading(Grading g) { grading_ = g; }

  const OpExpr& at(int order) const;
  void set(int order, OpExpr e);
  void add(int order, const OpExpr& e);
  int max_order() const;
  const std::map<int, OpExpr>& entries() const { return entries_; }

  /// Highest order up to which the series is known (zero entries are not
  /// stored, so this can exceed max_order()). -1 when never declared.
  int solved_to() const { return solved_to_; }
  void declare_solved_to(int order) { solved_to_ = order; }

  OpSeries operator+(const OpSeries& o) const;
  OpSeries scaled(const Coefficient& c) const;

 private:
  Grading grading_;
  std::map<int, OpExpr> entries_;
  int solved_to_ = -1;
};

/// Cauchy product truncated at grade <= max_order.
OpSeries series_mul(const OpSeries& u, const OpSeries& v, int max_order);

/// sum_k f_k A^k truncated at max_order; A must start at grade >= 1.
OpSeries compose_scalar_series(const std::vector<Rational>& f,
                               const OpSeries& a, int max_order);

/// Per-entry commutator_phi.
OpSeries series_commutator_phi(const OpSeries& a, int sign);

/// Order-by-order solution of 2mc^2 X = -X c s.p X + c s.p + q[phi, X]:
/// X_1 = s.p/2m, X_2 = 0, then 2m X_n = -sum_{k1+k2=n-1} X_k1 s.p X_k2
/// + q[phi, X_{n-2}].
OpSeries solve_dirac(int max_order, int phi_sign = -1);

/// The closed form: X_{2j} = 0 and
/// X_{2j+1} = a_j (-1)^j/(2m)^{2j+1} (s.p)^{2j+1}
///          + b_j iq hbar (-1)^j/(2m)^{2j} pi^{2j-2} (s.E)
///          + c_j iq hbar (-1)^j/(2m)^{2j} pi^{2j-4} (s.p)(E.p).
OpSeries closed_form_dirac(int max_order);

/// Order-by-order solution of the anomalous-moment correction X':
/// X'_1 = X'_2 = 0, 2m X'_3 = -i mu'' s.E, then for n >= 4
/// 2m X'_n = q[phi, X'_{n-2}] + mu''{X_{n-3}+X'_{n-3}, s.B}
///   - sum_{k1+k2=n-1}(X s.p X' + X' s.p X + X' s.p X')
///   - i mu'' sum_{k1+k2=n-3}(X s.E X + X s.E X' + X' s.E X + X' s.p X').
/// The primed-primed members vanish identically under the field-linear
/// truncation, so the printed s.p/s.E ambiguity in the last sum is moot.
OpSeries solve_pauli(int max_order, const OpSeries& x_dirac,
                     int phi_sign = -1);

/// The closed form: X'_{2j} = 2 b_{j-1} mu'' (-1)^j/(2m)^{2j-2} pi^{2j-4}(B.p)
/// and X'_{2j+1} = b_j i mu'' (-1)^j/(2m)^{2j-1} pi^{2j-2}(s.E)
///              + d_j i mu'' (-1)^{j+1}/(2m)^{2j-1} pi^{2j-4}(s.p)(E.p).
OpSeries closed_form_pauli(int max_order);

struct SeriesDiff {
  int order;
  OpExpr diff;  // lhs_order - rhs_order
};

struct SeriesComparison {
  bool equal;
  std::optional<SeriesDiff> first_diff;
  std::vector<SeriesDiff> all_diffs;
};

/// Exact per-order difference; requires matching gradings.
SeriesComparison compare_series(const OpSeries& u, const OpSeries& v,
                                int max_order);

struct StructureCheck {
  bool pass;
  std::string detail;  // first offending term when failing
};

/// X shape: even orders vanish; odd orders contain only field-free odd
/// sigma.pi powers and E-linear terms (no B content at all).
StructureCheck check_dirac_structure(const OpSeries& x, int max_order);

/// X' shape: every term carries exactly one field factor (O(F)); even orders
/// are purely (B.pi)-linear, odd orders purely E-linear; every term carries
/// mu''^1.
StructureCheck check_pauli_structure(const OpSeries& xp, int max_order);

/// Every term of grade g must have the dimension of c^g (X series are
/// dimensionless once the 1/c^g is restored).
StructureCheck check_x_dimensionless(const OpSeries& x, int max_order);

}  // namespace fwexact
