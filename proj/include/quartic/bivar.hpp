#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quartic/poly.hpp"

namespace quartic {

/// Exact polynomial in x and y over Q. Terms map (i, j) to the nonzero
/// coefficient of x^i y^j; zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BivarPoly() = default;
  explicit BivarPoly(const Terms& terms);

  static BivarPoly constant(const Rational& c);
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(const Rational& c, int i, int j);
  /// sum_j coeffs[j](x) * y^j.
  static BivarPoly from_y_coeffs(const std::vector<UniPoly>& coeffs);
  /// p(x) or p(y) as a bivariate polynomial.
  static BivarPoly in_x(const UniPoly& p);
  static BivarPoly in_y(const UniPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  /// Least total degree of a term; -1 for zero.
  int order() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  BivarPoly partial_x() const;
  BivarPoly partial_y() const;
  /// Sum of the terms of total degree d.
  BivarPoly homogeneous_part(int d) const;

  /// f(x + a, y + b).
  BivarPoly translate(const Rational& a, const Rational& b) const;
  /// f(a*x + b*y, c*x + d*y).
  BivarPoly linear_substitute(const Rational& a, const Rational& b,
                              const Rational& c, const Rational& d) const;
  /// f(x, y) -> f(y, x).
  BivarPoly swap_variables() const;

  /// Coefficients of y^j as polynomials in x, j = 0 .. degree_y.
  std::vector<UniPoly> y_coeffs() const;
  /// Coefficients of x^i as polynomials in y.
  std::vector<UniPoly> x_coeffs() const;
  /// f(x, 0) and f(t, c*t) style restrictions.
  UniPoly restrict_y(const Rational& y0) const;
  UniPoly restrict_x(const Rational& x0) const;

  BivarPoly pow(unsigned e) const;
  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Rational& s, const BivarPoly& p);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// Canonical text in the input grammar: terms by descending total degree,
/// then descending power of x; explicit '*' between factors.
std::string to_string(const BivarPoly& f);

/// True iff f has no repeated factor over Q (equivalently over C): the
/// content in x is square-free and the y-discriminant of the primitive
/// part does not vanish identically.
bool is_squarefree(const BivarPoly& f);

/// gcd over Q[x] of the coefficients of the powers of y, monic.
UniPoly content_in_x(const BivarPoly& f);

/// Exact quotient of f by a polynomial in x alone; throws on a remainder.
BivarPoly divide_by_x_poly(const BivarPoly& f, const UniPoly& d);

/// Res_y(f, g) as a polynomial in x (standard Sylvester convention).
UniPoly resultant_y(const BivarPoly& f, const BivarPoly& g);

}  // namespace quartic
