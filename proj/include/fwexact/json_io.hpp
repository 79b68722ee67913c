#pragma once

#include "fwexact/hamio.hpp"
#include "fwexact/sequences.hpp"
#include "fwexact/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace fwexact {

/// Insertion-ordered JSON keeps output byte-deterministic for fixed inputs.
using Json = nlohmann::ordered_json;

/// {num, den} as decimal strings (arbitrary precision safe).
Json rational_json(const Rational& r);
Json scalar_json(const ExactScalar& s);
Json units_json(const UnitVector& u);
Json mono_json(const OpMonomial& m);

/// Array of {coeff, units, mono} terms in canonical order.
Json expr_json(const OpExpr& e);

Json series_json(const OpSeries& s, const std::string& symbol);
Json hamiltonian_json(const HamiltonianSeries& h, const std::string& theory,
                      const std::string& representation);

Json coeffs_json(const SeqTable& t, int jmax, int identity_jmax);
Json series_check_json(const SeqTable& t, int order);

Json report_json(const VerificationReport& report,
                 const std::string& command);

}  // namespace fwexact
