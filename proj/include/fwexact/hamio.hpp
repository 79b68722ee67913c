#pragma once

#include "fwexact/fps.hpp"
#include "fwexact/fwsolve.hpp"

#include <map>
#include <string>

namespace fwexact {

/// Assembled Hamiltonian: graded body plus the distinguished rest energy
/// mc^2 (grade -2, kept as a flag rather than an OpExpr). The potential
/// term q*phi lives in the grade-0 body as a phi monomial.
struct HamiltonianSeries {
  OpSeries body;
  bool rest_energy = false;

  HamiltonianSeries() : body(Grading::Recursion) {}
  explicit HamiltonianSeries(Grading g) : body(g) {}
};

enum class Route { Conjugation, Commutator };
enum class HamKind { Dirac, Pauli, Total };

/// Per-grade capture of the would-be antihermitian (E.pi)-sector
/// contributions of each assembly source, before they cancel in the
/// canonical sum. This is the computed replacement for the printed
/// coefficient identities.
struct AssemblyBreakdown {
  std::map<int, std::map<std::string, OpExpr>> edotpi_by_grade;
};

/// Structure functions of gamma_pi = sqrt(1 + x^2), x = |pi|/(mc), held as
/// exact FPS. Each operator structure of the closed form carries up to two
/// unit sectors: the intrinsic-moment one (prefactor mu') and the Dirac one
/// (prefactor q hbar/2mc).
struct ClosedFormTarget {
  FPS orbital;          // gamma itself: orbital energy mc^2 * gamma
  FPS sigma_b_moment;   // sigma.B, mu' sector
  FPS sigma_b_dirac;    // sigma.B, q hbar/2mc sector: 1/gamma
  FPS b_dot_pi_moment;  // (sigma.pi/mc)(pi/mc . B): 1/(gamma(1+gamma))
  FPS ex_pi_moment;     // sigma.(pi/mc x E), mu' sector: 1/gamma
  FPS ex_pi_dirac;      // sigma.(pi/mc x E), q hbar/2mc sector
};

ClosedFormTarget closed_form_target(HamKind kind, int fps_order);

/// Exact Cauchy-product series of dagger(X) * X, grades <= max_order.
OpSeries xdag_x(const OpSeries& x, int max_order);

/// H_FW - mc^2 assembled from the solved X.
///   Commutator route:  q phi + c s.p X - (1/2)[q phi, A] (1+A)^{-1}
///   Conjugation route: sqrt(1+A)(q phi + c s.p X)(1+A)^{-1/2}, with the
///   phi factor moved out by the derivative rule [f(A), phi] = f'(A)[A, phi]
/// where A = X^dag X. Requires X solved to max_order + 1.
HamiltonianSeries assemble_h_dirac(const OpSeries& x, int max_order,
                                   Route route, int phi_sign = -1,
                                   AssemblyBreakdown* breakdown = nullptr);

/// H'_FW = c s.p X' - mu' s.B + i mu' s.E X, to linear order in the fields,
/// with mu' = mu''/c folded into the grading. Requires X, X' solved to
/// max_order + 1.
HamiltonianSeries assemble_h_pauli(const OpSeries& x, const OpSeries& xp,
                                   int max_order,
                                   AssemblyBreakdown* breakdown = nullptr);

/// Taylor expansion of the closed forms, emitted directly in the expanded
/// pi-basis at physical grading:
///   Dirac: q phi + mc^2 gamma - (q hbar/2mc)(1/gamma) s.B
///          + (q hbar/2mc)(1/gamma - 1/(1+gamma)) sigma.(pi/mc x E)
///   Pauli: mu'(1/gamma - 1/(1+gamma)) (s.pi)(pi.B)/(mc)^2
///          + mu'(1/gamma) sigma.(pi/mc x E) - mu' s.B
///   Total: the sum, grouped as the combined-moment closed form.
HamiltonianSeries closed_form_h(HamKind kind, int max_order);

/// Independent construction from the classical orbital + spin Hamiltonian
/// with s = (hbar/2) sigma and gamma'_m = (2 mu''/(hbar c)) * gamma_m_factor.
/// gamma_m_factor 0 is the Dirac (pure moment) case; 1 the anomalous case;
/// other values perturb the anomalous moment for sensitivity controls.
HamiltonianSeries classical_h(int max_order, const Rational& gamma_m_factor);

/// Folds explicit c-exponents in units into the grade; idempotent on
/// physical-graded input.
OpSeries regrade(const OpSeries& s);
HamiltonianSeries regrade(const HamiltonianSeries& h);

/// expand_sigma_pi on every entry, then regrade.
HamiltonianSeries physicalize(const HamiltonianSeries& h);

HamiltonianSeries ham_sum(const HamiltonianSeries& a,
                          const HamiltonianSeries& b);

/// Exact per-order comparison of two Hamiltonian series (bodies and rest
/// energy flags).
SeriesComparison compare_hamiltonians(const HamiltonianSeries& u,
                                      const HamiltonianSeries& v,
                                      int max_order);

/// Antihermitian residue at every grade <= max_order must vanish.
StructureCheck check_hermiticity(const HamiltonianSeries& h, int max_order);

/// Every term of grade g must have dimension energy * c^g.
StructureCheck check_energy_dimension(const HamiltonianSeries& h,
                                      int max_order);

/// The expanded total Hamiltonian may contain only: the phi monomial,
/// field-free pi^{2n}, pi^{2n} sigma.B, pi^{2n}(sigma.pi)(B.pi), and
/// pi^{2n}(Expi).sigma. In particular no (Bxpi).sigma and no bare (E.pi).
StructureCheck check_structure_purity(const HamiltonianSeries& h,
                                      int max_order);

struct QuantumClassicalResult {
  SeriesComparison dirac;
  SeriesComparison pauli;
};

/// Full pipeline: solve, assemble, expand, regrade, and diff against the
/// classical construction, for both theories.
QuantumClassicalResult compare_quantum_classical(int max_order,
                                                 int phi_sign = -1);

}  // namespace fwexact
