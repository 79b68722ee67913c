#include "fwexact/sequences.hpp"

#include <stdexcept>

namespace fwexact {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

void SeqTable::ensure(int jmax) const {
  if (jmax < 0) throw std::domain_error("SeqTable: negative index");
  int have = static_cast<int>(a_.size()) - 1;
  if (jmax <= have) return;
  a_.resize(jmax + 1);
  b_.resize(jmax + 1);
  c_.resize(jmax + 1);
  d_.resize(jmax + 1);
  for (int j = have + 1; j <= jmax; ++j) {
    BigInt a_den = factorial(j) * factorial(j + 1);
    BigInt a_num = factorial(2 * j);
    if (a_num % a_den != 0)
      throw std::logic_error("SeqTable: a_j not integral");
    a_[j] = a_num / a_den;
    if (j == 0) {
      b_[j] = 0;
    } else {
      BigInt b_den = factorial(j) * factorial(j - 1);
      BigInt b_num = factorial(2 * j - 1);
      if (b_num % b_den != 0)
        throw std::logic_error("SeqTable: b_j not integral");
      b_[j] = b_num / b_den;
    }
  }
  // c_j = 2 sum_{j1+j2=j} b_j1 b_j2
  for (int j = std::max(have + 1, 0); j <= jmax; ++j) {
    BigInt s = 0;
    for (int j1 = 0; j1 <= j; ++j1) s += b_[j1] * b_[j - j1];
    c_[j] = 2 * s;
  }
  // d_j = sum_{j1+j2+j3=j-2} 2(j1+1) a_j1 a_j2 a_j3, grouped over the inner
  // a*a convolution.
  std::vector<BigInt> conv_aa(jmax + 1);
  for (int t = 0; t <= jmax; ++t) {
    BigInt s = 0;
    for (int j2 = 0; j2 <= t; ++j2) s += a_[j2] * a_[t - j2];
    conv_aa[t] = s;
  }
  for (int j = have + 1; j <= jmax; ++j) {
    if (j < 2) {
      d_[j] = 0;
      continue;
    }
    BigInt s = 0;
    for (int j1 = 0; j1 <= j - 2; ++j1)
      s += 2 * (j1 + 1) * a_[j1] * conv_aa[j - 2 - j1];
    d_[j] = s;
  }
}

const BigInt& SeqTable::a(int j) const {
  ensure(j);
  return a_[j];
}
const BigInt& SeqTable::b(int j) const {
  ensure(j);
  return b_[j];
}
const BigInt& SeqTable::c(int j) const {
  ensure(j);
  return c_[j];
}
const BigInt& SeqTable::d(int j) const {
  ensure(j);
  return d_[j];
}

const BigInt& SeqTable::coeff(Seq s, int j) const {
  switch (s) {
    case Seq::A: return a(j);
    case Seq::B: return b(j);
    case Seq::C: return c(j);
    case Seq::D: return d(j);
  }
  throw std::logic_error("unreachable");
}

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::A: return "A";
    case Identity::B: return "B";
    case Identity::C1: return "C1";
    case Identity::C2: return "C2";
    case Identity::D: return "D";
    case Identity::E: return "E";
    case Identity::F: return "F";
  }
  return "?";
}

int identity_j_min(Identity id) {
  switch (id) {
    case Identity::D: return 0;
    case Identity::E: return 2;
    default: return 1;
  }
}

bool identity_expected_inconsistent(Identity id) {
  return id == Identity::C1 || id == Identity::F;
}

IdentityReport check_identity(const SeqTable& t, Identity id, int j_max) {
  int j_min = identity_j_min(id);
  if (j_max < j_min)
    throw std::domain_error("check_identity: j_max below the identity range");
  t.ensure(j_max + 1);
  IdentityReport report{id, j_min, j_max, true, std::nullopt};
  for (int j = j_min; j <= j_max; ++j) {
    BigInt lhs, rhs;
    switch (id) {
      case Identity::A: {
        lhs = 0;
        for (int j1 = 0; j1 <= j - 1; ++j1) lhs += t.a(j1) * t.a(j - 1 - j1);
        rhs = t.a(j);
        break;
      }
      case Identity::B: {
        lhs = 0;
        for (int j1 = 0; j1 <= j - 1; ++j1) lhs += t.a(j1) * t.b(j - 1 - j1);
        lhs *= 2;
        rhs = t.b(j) - t.a(j - 1);
        // Both printed right-hand forms must agree.
        if (rhs != BigInt(2 * (j - 1)) * t.a(j - 1)) {
          report.pass = false;
          report.first_failure = IdentityFailure{j, rhs,
                                                 BigInt(2 * (j - 1)) *
                                                     t.a(j - 1)};
          return report;
        }
        break;
      }
      case Identity::C1:
      case Identity::C2: {
        lhs = 0;
        for (int j1 = 0; j1 <= j - 1; ++j1) lhs += t.a(j1) * t.c(j - 1 - j1);
        lhs *= 2;
        rhs = id == Identity::C1
                  ? t.c(j) - t.b(j) + t.a(j)
                  : t.c(j) - BigInt(2 * (j - 1)) * t.a(j - 1);
        break;
      }
      case Identity::D: {
        lhs = t.b(j + 1) + t.c(j + 1);
        rhs = 4 * t.b(j) + 4 * t.c(j) + t.a(j);
        break;
      }
      case Identity::E: {
        lhs = 0;
        for (int j1 = 0; j1 <= j - 1; ++j1) lhs += t.a(j1) * t.d(j - 1 - j1);
        lhs = 2 * lhs + 2 * t.a(j - 1);
        rhs = t.d(j);
        break;
      }
      case Identity::F: {
        lhs = t.b(j + 1) + t.a(j);
        rhs = t.d(j + 1);
        break;
      }
    }
    if (lhs != rhs) {
      report.pass = false;
      report.first_failure = IdentityFailure{j, lhs, rhs};
      return report;
    }
  }
  return report;
}

FPS fps_arith(const FPS& x, const FPS& y, FpsArithKind kind) {
  switch (kind) {
    case FpsArithKind::Add: return x + y;
    case FpsArithKind::Mul: return x * y;
    case FpsArithKind::Reciprocal: return x.reciprocal();
    case FpsArithKind::SqrtOfOnePlus: return x.sqrt_of_one_plus();
    case FpsArithKind::Compose: return x.compose(y);
  }
  throw std::logic_error("unreachable");
}

FPS gamma_series(int order) {
  return FPS::monomial(2, order).sqrt_of_one_plus();
}

FPS inv_gamma_series(int order) { return gamma_series(order).reciprocal(); }

FPS inv_one_plus_gamma_series(int order) {
  FPS g = gamma_series(order);
  g[0] += 1;
  return g.reciprocal();
}

namespace {

// Left-hand sums of the four series identities, as printed:
//   a: sum_{j>=0} a_j (-1)^j / 2^{2j+1} x^{2j+1}
//   b: sum_{j>=1} b_j (-1)^j / 2^{2j}   x^{2j-2}
//   c: sum_{j>=2} c_j (-1)^j / 2^{2j}   x^{2j-4}
//   d: sum_{j>=2} d_j (-1)^j / 2^{2j-1} x^{2j-4}
FPS series_lhs(const SeqTable& t, Seq name, int order) {
  FPS lhs(order);
  switch (name) {
    case Seq::A:
      for (int j = 0; 2 * j + 1 <= order; ++j)
        lhs[2 * j + 1] = Rational(t.a(j) * (j % 2 ? -1 : 1),
                                  BigInt(1) << (2 * j + 1));
      break;
    case Seq::B:
      for (int j = 1; 2 * j - 2 <= order; ++j)
        lhs[2 * j - 2] =
            Rational(t.b(j) * (j % 2 ? -1 : 1), BigInt(1) << (2 * j));
      break;
    case Seq::C:
      for (int j = 2; 2 * j - 4 <= order; ++j)
        lhs[2 * j - 4] =
            Rational(t.c(j) * (j % 2 ? -1 : 1), BigInt(1) << (2 * j));
      break;
    case Seq::D:
      for (int j = 2; 2 * j - 4 <= order; ++j)
        lhs[2 * j - 4] =
            Rational(t.d(j) * (j % 2 ? -1 : 1), BigInt(1) << (2 * j - 1));
      break;
  }
  return lhs;
}

FPS series_b_rhs(int order) {
  return (inv_one_plus_gamma_series(order) - inv_gamma_series(order))
      .scaled(Rational(1, 2));
}

SeriesReport compare_series(Seq name, int order, const FPS& lhs,
                            const FPS& rhs) {
  SeriesReport report{name, order, true, std::nullopt};
  int k = lhs.first_mismatch(rhs);
  if (k >= 0) {
    report.pass = false;
    report.first_failure = SeriesFailure{k, lhs[k], rhs[k]};
  }
  return report;
}

}  // namespace

SeriesReport verify_series(const SeqTable& t, Seq name, int order) {
  if (order < 4) throw std::domain_error("verify_series: order must be >= 4");
  FPS lhs = series_lhs(t, name, order);
  FPS rhs(order);
  switch (name) {
    case Seq::A: {
      // x/(1+sqrt(1+x^2)); also check the equivalent (sqrt(1+x^2)-1)/x form.
      rhs = FPS::monomial(1, order) * inv_one_plus_gamma_series(order);
      FPS g = gamma_series(order);
      g[0] -= 1;
      FPS alt = g.shift_down(1);
      for (int k = 0; k + 1 <= order; ++k)
        if (alt[k] != rhs[k])
          return SeriesReport{name, order, false,
                              SeriesFailure{k, alt[k], rhs[k]}};
      break;
    }
    case Seq::B:
      rhs = series_b_rhs(order);
      break;
    case Seq::C: {
      // Consistent with c_j = 2 sum b b: rhs = 2*(rhs of series b)^2,
      // i.e. prefactor 1/2 on the squared bracket (printed: 1/8).
      FPS rb = series_b_rhs(order);
      rhs = (rb * rb).scaled(2);
      break;
    }
    case Seq::D: {
      FPS inv1pg = inv_one_plus_gamma_series(order);
      rhs = inv_gamma_series(order) * inv1pg * inv1pg;
      break;
    }
  }
  return compare_series(name, order, lhs, rhs);
}

SeriesReport series_c_printed_prefactor_report(const SeqTable& t, int order) {
  FPS lhs = series_lhs(t, Seq::C, order);
  FPS bracket = inv_one_plus_gamma_series(order) - inv_gamma_series(order);
  FPS rhs = (bracket * bracket).scaled(Rational(1, 8));
  return compare_series(Seq::C, order, lhs, rhs);
}

}  // namespace fwexact
