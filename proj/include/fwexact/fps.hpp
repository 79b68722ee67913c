#pragma once

#include "fwexact/scalars.hpp"

#include <vector>

namespace fwexact {

/// Dense univariate formal power series over the rationals, truncated at a
/// fixed order. Arithmetic never extends past the truncation order of the
/// operands (the common order is the minimum).
class FPS {
 public:
  FPS() = default;
  explicit FPS(int trunc_order) : coeffs_(trunc_order + 1, Rational(0)) {}
  FPS(std::vector<Rational> coeffs, int trunc_order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(trunc_order + 1, Rational(0));
  }

  static FPS constant(Rational c, int trunc_order) {
    FPS f(trunc_order);
    f.coeffs_[0] = std::move(c);
    return f;
  }
  /// The monomial x^k (zero if k exceeds the truncation order).
  static FPS monomial(int k, int trunc_order, Rational c = Rational(1));

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  Rational& operator[](int k) { return coeffs_.at(k); }

  FPS operator+(const FPS& o) const;
  FPS operator-(const FPS& o) const;
  FPS operator*(const FPS& o) const;
  FPS scaled(const Rational& c) const;

  /// 1/f; requires a nonzero constant term.
  FPS reciprocal() const;
  /// sqrt(1 + f); requires f to have zero constant term.
  FPS sqrt_of_one_plus() const;
  /// this(g); requires g to have zero constant term.
  FPS compose(const FPS& g) const;
  /// f/x^k; requires the first k coefficients to vanish.
  FPS shift_down(int k) const;

  bool operator==(const FPS& o) const { return coeffs_ == o.coeffs_; }
  bool is_zero() const;
  /// Index of the first coefficient differing from o, or -1 when equal.
  int first_mismatch(const FPS& o) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Exact binomial coefficient (r choose k) for rational r.
Rational binomial(const Rational& r, int k);

}  // namespace fwexact
