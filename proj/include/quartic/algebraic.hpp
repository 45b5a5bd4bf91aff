#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quartic/complex_box.hpp"
#include "quartic/sturm.hpp"

namespace quartic {

/// One root of a square-free rational polynomial, pinned by a box that
/// contains exactly that root. A real root has a zero-height box on the real
/// axis given by its Sturm isolating interval; a non-real root has a box of
/// positive area holding no other root and no root on its boundary.
class RootBox {
 public:
  RootBox() = default;

  /// Certifies that `box` holds exactly one root of the square-free `poly`.
  /// Throws std::invalid_argument otherwise.
  static RootBox certify(const UniPoly& poly, const Box& box);

  static RootBox real_root(const UniPoly& poly, const RealInterval& iv);

  const UniPoly& poly() const { return poly_; }
  const Box& box() const { return box_; }
  bool is_real() const { return real_; }
  /// Real isolating interval; only meaningful when is_real().
  const RealInterval& real_interval() const { return iv_; }

  /// Shrinks the box below `width` (deterministic bisection). Throws
  /// PrecisionExhaustedError when more than `budget` bisections are needed.
  RootBox refined(const Rational& width, int budget = 4000) const;

  RootBox conjugate() const;
  /// The root -alpha of p(-z).
  RootBox negated() const;

  /// Exact identity test for two roots of the same polynomial.
  bool same_root(const RootBox& other) const;

  std::complex<double> approx() const;
  /// Midpoint after refining below `width`, as long doubles.
  std::complex<long double> approx(const Rational& width) const;

 private:
  UniPoly poly_;
  Box box_;
  bool real_ = false;
  RealInterval iv_;
};

/// Every root of the square-free p: real roots ascending, then each
/// upper-half-plane root followed by its conjugate, upper roots ordered by
/// box midpoint (real part, then imaginary part).
std::vector<RootBox> isolate_all_roots(const UniPoly& p);

/// Exact algebraic number: monic irreducible minimal polynomial over Q and
/// an isolating box for the designated root.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(from_rational(Rational(0))) {}

  static AlgebraicNumber from_rational(const Rational& r);

  /// The roots of an irreducible polynomial, in isolate_all_roots order.
  static std::vector<AlgebraicNumber> roots_of(const UniPoly& irreducible);

  const UniPoly& minpoly() const { return root_.poly(); }
  const Box& box() const { return root_.box(); }
  const RootBox& root() const { return root_; }
  int budget() const { return budget_; }
  AlgebraicNumber with_budget(int budget) const;

  int degree() const { return minpoly().degree(); }
  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;
  bool is_zero() const { return is_rational() && sgn(minpoly().coeff(0)) == 0; }
  bool is_real() const { return root_.is_real(); }

  AlgebraicNumber conjugate() const;
  AlgebraicNumber negated() const;

  std::complex<double> approx() const { return root_.approx(); }
  std::complex<long double> approx(const Rational& width) const {
    return root_.approx(width);
  }

  /// Short description: the rational value, or "RootOf(minpoly, ~value)".
  std::string to_string() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return !(a == b);
  }

 private:
  friend AlgebraicNumber minpoly_of_root(const UniPoly&, const Box&);
  friend AlgebraicNumber refine_box(const AlgebraicNumber&, const Rational&);
  explicit AlgebraicNumber(RootBox root, int budget = 4000)
      : root_(std::move(root)), budget_(budget) {}

  RootBox root_;
  int budget_ = 4000;
};

/// Deterministic order: degree, minpoly coefficients, box midpoint.
bool algebraic_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// The algebraic number designated by `box` among the roots of `defining`,
/// with minimal polynomial the irreducible factor vanishing there. Requires
/// degree(defining) <= 4 after removing repeated factors beyond what
/// factor_over_q_deg_le4 supports. Throws std::invalid_argument when the box
/// holds zero or several distinct roots.
AlgebraicNumber minpoly_of_root(const UniPoly& defining, const Box& box);

/// Same root with box width at most `width_bound`. Throws
/// PrecisionExhaustedError when the number's refinement budget runs out.
AlgebraicNumber refine_box(const AlgebraicNumber& a, const Rational& width_bound);

/// Decides exactly whether c * exp(i*pi*turn) is real, for rational `turn`.
bool rotated_is_real(const AlgebraicNumber& c, const Rational& turn);

}  // namespace quartic
