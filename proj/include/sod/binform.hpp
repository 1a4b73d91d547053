#pragma once

#include <array>
#include <string>
#include <vector>

#include "sod/rational.hpp"

namespace sod {

// Homogeneous binary form in coordinates (u, v), dense representation:
// c[i] is the coefficient of u^(deg-i) v^i. The zero form carries deg = -1
// and is compatible with any degree.
struct BinForm {
  int deg = -1;
  std::vector<Rational> c;

  BinForm() = default;
  static BinForm zero() { return BinForm(); }
  static BinForm constant(const Rational& a);
  static BinForm from_coeffs(int deg, std::vector<Rational> coeffs);
  static BinForm monomial(int deg, int vpow, const Rational& coeff);

  bool is_zero() const { return deg < 0; }
  Rational coeff(int vpow) const;

  BinForm operator+(const BinForm& o) const;
  BinForm operator-(const BinForm& o) const;
  BinForm operator*(const BinForm& o) const;
  BinForm operator*(const Rational& a) const;
  BinForm operator-() const;
  bool operator==(const BinForm& o) const;
  bool operator!=(const BinForm& o) const { return !(*this == o); }

  Rational eval(const Rational& u, const Rational& v) const;

  std::string str() const;
};

// Projective point on the line, normalized so the first nonzero coordinate
// is 1 (so [1:x] or [0:1]).
struct LinePoint {
  Rational u, v;
  static LinePoint of(const Rational& u, const Rational& v);
  bool operator==(const LinePoint& o) const { return u == o.u && v == o.v; }
  std::string str() const;
};

struct FormRoots {
  std::vector<std::pair<LinePoint, int>> roots;  // rational roots with
                                                 // multiplicities
  int residual_degree = 0;  // degree of the factor without rational roots
};

// Exact rational root structure of a nonzero form, via u/v power stripping
// and the rational root theorem on the primitive integer part.
FormRoots form_roots(const BinForm& f);

BinForm binform_gcd(const BinForm& a, const BinForm& b);

// Determinant of a square matrix of forms by cofactor expansion. All nonzero
// permutation products must share one degree (throws on an inhomogeneous sum).
BinForm form_det(const std::vector<std::vector<BinForm>>& m);

// Substitute u -> a*u + b*v, v -> c*u + d*v.
BinForm binform_substitute(const BinForm& f, const Rational& a,
                           const Rational& b, const Rational& c,
                           const Rational& d);

// Order of vanishing at a point.
int form_ord_at(const BinForm& f, const LinePoint& p);

}  // namespace sod
