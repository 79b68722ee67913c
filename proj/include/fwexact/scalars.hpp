#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace fwexact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational: complex number with exact rational real and imaginary
/// parts. cpp_rational keeps both parts reduced (gcd 1, positive denominator),
/// so zero has a unique representation.
struct ExactScalar {
  Rational re{0};
  Rational im{0};

  ExactScalar() = default;
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return {Rational(1), Rational(0)}; }
  static ExactScalar i() { return {Rational(0), Rational(1)}; }
  static ExactScalar of(long num, long den = 1) {
    return {Rational(num, den), Rational(0)};
  }
  static ExactScalar real(Rational r) { return {std::move(r), Rational(0)}; }
  static ExactScalar imag(Rational r) { return {Rational(0), std::move(r)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactScalar conj() const { return {re, -im}; }
  ExactScalar operator-() const { return {-re, -im}; }

  ExactScalar operator+(const ExactScalar& o) const {
    return {re + o.re, im + o.im};
  }
  ExactScalar operator-(const ExactScalar& o) const {
    return {re - o.re, im - o.im};
  }
  ExactScalar operator*(const ExactScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ExactScalar operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    Rational n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const ExactScalar& o) const {
    return re == o.re && im == o.im;
  }

  std::string str() const;
};

/// Integer exponents over the fixed unit basis {hbar, q, m, c, mu''}.
/// mu'' := c*mu' is the stored base unit; mu' appears only at presentation.
struct UnitVector {
  int hbar = 0;
  int q = 0;
  int m = 0;
  int c = 0;
  int mupp = 0;

  static UnitVector none() { return {}; }

  UnitVector operator+(const UnitVector& o) const {
    return {hbar + o.hbar, q + o.q, m + o.m, c + o.c, mupp + o.mupp};
  }
  UnitVector operator-(const UnitVector& o) const {
    return {hbar - o.hbar, q - o.q, m - o.m, c - o.c, mupp - o.mupp};
  }
  bool operator==(const UnitVector&) const = default;
  auto operator<=>(const UnitVector&) const = default;
  bool is_none() const { return *this == UnitVector{}; }

  std::string str() const;
};

/// Exact prefactor: scalar times a unit monomial.
struct Coefficient {
  ExactScalar scalar;
  UnitVector units;

  Coefficient() = default;
  Coefficient(ExactScalar s, UnitVector u = {})
      : scalar(std::move(s)), units(u) {}

  static Coefficient one() { return {ExactScalar::one()}; }

  bool is_zero() const { return scalar.is_zero(); }
  bool mergeable_with(const Coefficient& o) const { return units == o.units; }

  Coefficient operator*(const Coefficient& o) const {
    return {scalar * o.scalar, units + o.units};
  }
  Coefficient operator-() const { return {-scalar, units}; }

  std::string str() const;
};

/// Sum of two coefficients sharing a unit monomial; nullopt when units differ.
std::optional<Coefficient> coeff_merge(const Coefficient& c1,
                                       const Coefficient& c2);

/// Rational exponents over (mass, length, time), Gaussian units. E and B have
/// half-integer dimensions, hence rational entries.
struct Dimension {
  Rational mass{0};
  Rational length{0};
  Rational time{0};

  Dimension operator+(const Dimension& o) const {
    return {mass + o.mass, length + o.length, time + o.time};
  }
  Dimension operator*(int k) const {
    return {mass * k, length * k, time * k};
  }
  bool operator==(const Dimension&) const = default;

  static Dimension dimensionless() { return {}; }
  static Dimension energy() { return {1, 2, -2}; }
  static Dimension velocity() { return {0, 1, -1}; }

  std::string str() const;
};

/// Operator factors a monomial contributes to the dimension count.
struct OperatorContent {
  int pi_power = 0;   // total power of pi components (sigma is dimensionless)
  int e_count = 0;    // factors of E
  int b_count = 0;    // factors of B
  bool phi = false;   // scalar potential factor
};

Dimension dimension_of(const Coefficient& c, const OperatorContent& content);

}  // namespace fwexact
