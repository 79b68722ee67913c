#pragma once

#include "fwexact/hamio.hpp"
#include "fwexact/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fwexact {

inline constexpr const char* kVersion = "1.0.0";

struct VerifyConfig {
  int order = 10;          // operator-series checks (X, X', H, classical)
  int phi_sign = -1;       // primitive [phi, pi_i] = phi_sign * i hbar E_i
  int series_order = 100;  // Taylor-series identities, power of x
  int identity_jmax = 200; // combinatorial identity range
};

struct FailureLocator {
  std::optional<int> order;  // series order or identity index
  std::string structure;     // offending monomial / structure / identity id
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  bool authoritative = true;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::optional<FailureLocator> first_failure;
  std::string detail;

  /// "pass", "fail", or "printed-inconsistent" for the non-authoritative
  /// checks that document typos in the printed source.
  std::string status() const;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool overall_pass = false;
  /// Captured (E.pi)-sector contributions of the H' assembly, per grade and
  /// source; their order-by-order cancellation is the computed content behind
  /// the hermiticity check.
  AssemblyBreakdown pauli_breakdown;
};

/// Runs the whole pipeline: recursion-vs-closed-form for both theories,
/// series and combinatorial identities, hermiticity, route equivalence,
/// resummation, quantum-vs-classical, structural and dimensional checks.
VerificationReport run_verification(const VerifyConfig& config);

std::string report_text(const VerificationReport& report);

}  // namespace fwexact
