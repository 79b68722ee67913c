#include "fwexact/fps.hpp"

#include <algorithm>
#include <stdexcept>

namespace fwexact {

FPS FPS::monomial(int k, int trunc_order, Rational c) {
  FPS f(trunc_order);
  if (k <= trunc_order) f.coeffs_[k] = std::move(c);
  return f;
}

FPS FPS::operator+(const FPS& o) const {
  int n = std::min(order(), o.order());
  FPS r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

FPS FPS::operator-(const FPS& o) const {
  int n = std::min(order(), o.order());
  FPS r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

FPS FPS::operator*(const FPS& o) const {
  int n = std::min(order(), o.order());
  FPS r(n);
  for (int a = 0; a <= n; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; a + b <= n; ++b) {
      if (o.coeffs_[b] == 0) continue;
      r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return r;
}

FPS FPS::scaled(const Rational& c) const {
  FPS r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
  return r;
}

FPS FPS::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("FPS::reciprocal: zero constant term");
  int n = order();
  FPS r(n);
  r.coeffs_[0] = Rational(1) / coeffs_[0];
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int a = 1; a <= k; ++a) s += coeffs_[a] * r.coeffs_[k - a];
    r.coeffs_[k] = -s / coeffs_[0];
  }
  return r;
}

FPS FPS::sqrt_of_one_plus() const {
  if (coeffs_[0] != 0)
    throw std::domain_error("FPS::sqrt_of_one_plus: nonzero constant term");
  // g^2 = 1 + f with g_0 = 1: g_k = (f_k - sum_{0<a<k} g_a g_{k-a}) / 2.
  int n = order();
  FPS g(n);
  g.coeffs_[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int a = 1; a < k; ++a) s += g.coeffs_[a] * g.coeffs_[k - a];
    g.coeffs_[k] = (coeffs_[k] - s) / 2;
  }
  return g;
}

FPS FPS::compose(const FPS& g) const {
  if (g.coeffs_[0] != 0)
    throw std::domain_error("FPS::compose: inner series has constant term");
  int n = std::min(order(), g.order());
  // Horner: r = f_n; r = r*g + f_k.
  FPS r = FPS::constant(coeffs_[order()], n);
  for (int k = order() - 1; k >= 0; --k) {
    r = r * g;
    r.coeffs_[0] += coeffs_[k];
  }
  return r;
}

FPS FPS::shift_down(int k) const {
  for (int a = 0; a < k; ++a)
    if (coeffs_[a] != 0)
      throw std::domain_error("FPS::shift_down: low-order coefficient nonzero");
  FPS r(order() - k);
  for (int a = 0; a + k <= order(); ++a) r.coeffs_[a] = coeffs_[a + k];
  return r;
}

bool FPS::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

int FPS::first_mismatch(const FPS& o) const {
  int n = std::min(order(), o.order());
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != o.coeffs_[k]) return k;
  return -1;
}

Rational binomial(const Rational& r, int k) {
  Rational out(1);
  for (int a = 0; a < k; ++a) out *= (r - a) / (a + 1);
  return out;
}

}  // namespace fwexact
