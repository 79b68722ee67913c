#include "fwexact/scalars.hpp"

#include <sstream>

namespace fwexact {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

void append_unit(std::string& out, const char* sym, int exp) {
  if (exp == 0) return;
  if (!out.empty()) out += " ";
  out += sym;
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re != 0) out += rational_str(re);
  if (im != 0) {
    if (!out.empty() && im > 0) out += "+";
    if (im == 1)
      out += "i";
    else if (im == -1)
      out += "-i";
    else
      out += rational_str(im) + "i";
  }
  return out;
}

std::string UnitVector::str() const {
  std::string out;
  append_unit(out, "hbar", hbar);
  append_unit(out, "q", q);
  append_unit(out, "m", m);
  append_unit(out, "c", c);
  append_unit(out, "mu''", mupp);
  return out;
}

std::string Coefficient::str() const {
  std::string s = scalar.str();
  std::string u = units.str();
  if (u.empty()) return s;
  if (s == "1") return u;
  if (s == "-1") return "-" + u;
  return "(" + s + ") " + u;
}

std::optional<Coefficient> coeff_merge(const Coefficient& c1,
                                       const Coefficient& c2) {
  if (!c1.mergeable_with(c2)) return std::nullopt;
  return Coefficient{c1.scalar + c2.scalar, c1.units};
}

std::string Dimension::str() const {
  std::ostringstream os;
  os << "M^" << mass << " L^" << length << " T^" << time;
  return os.str();
}

namespace {

// Gaussian-unit dimensions of the base symbols and operator factors.
const Dimension kDimHbar{1, 2, -1};
const Dimension kDimQ{Rational(1, 2), Rational(3, 2), -1};
const Dimension kDimM{1, 0, 0};
const Dimension kDimC{0, 1, -1};
// mu'' = c*mu'; mu' has dimension energy/B = M^1/2 L^5/2 T^-1.
const Dimension kDimMupp{Rational(1, 2), Rational(7, 2), -2};
const Dimension kDimPi{1, 1, -1};
const Dimension kDimField{Rational(1, 2), Rational(-1, 2), -1};  // E and B
const Dimension kDimPhi{Rational(1, 2), Rational(1, 2), -1};

}  // namespace

Dimension dimension_of(const Coefficient& c, const OperatorContent& content) {
  Dimension d;
  d = d + kDimHbar * c.units.hbar;
  d = d + kDimQ * c.units.q;
  d = d + kDimM * c.units.m;
  d = d + kDimC * c.units.c;
  d = d + kDimMupp * c.units.mupp;
  d = d + kDimPi * content.pi_power;
  d = d + kDimField * (content.e_count + content.b_count);
  if (content.phi) d = d + kDimPhi;
  return d;
}

}  // namespace fwexact
