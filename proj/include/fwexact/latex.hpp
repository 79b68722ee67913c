#pragma once

#include "fwexact/hamio.hpp"

#include <string>

namespace fwexact {

/// One expression as LaTeX math. `extra_c_exponent` is folded into the
/// displayed units (used to show physical-grade terms with their 1/c^g
/// restored); a mu''^1 unit with a spare negative c-exponent prints as mu'.
std::string latex_expr(const OpExpr& e, int extra_c_exponent = 0);

/// align* block with one line per order, closed-form listing style.
std::string latex_series(const OpSeries& s, const std::string& symbol);

/// Hamiltonian as an align* block; the expanded physical representation is
/// grouped by operator structure with explicit 1/c powers, the compact one
/// listed per order.
std::string latex_hamiltonian(const HamiltonianSeries& h,
                              const std::string& symbol);

/// Wraps math into a standalone compilable document.
std::string latex_document(const std::string& body);

}  // namespace fwexact
