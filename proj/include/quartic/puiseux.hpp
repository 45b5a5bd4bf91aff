#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebraic.hpp"
#include "quartic/bivar.hpp"

namespace quartic {

enum class Reality { real_for_positive_x, real_for_negative_x, both, complex_only };

std::string to_string(Reality r);

struct PuiseuxTerm {
  Rational exponent;
  AlgebraicNumber coeff;
};

/// One pro-branch expanded until its coefficient is a simple root of an edge
/// polynomial (or the jet solves f exactly). Exponents increase strictly; a
/// zero coefficient marks an exponent where another branch sharing the
/// earlier coefficients separates with a nonzero one.
struct PuiseuxBranch {
  int m = 1;
  std::vector<PuiseuxTerm> terms;
  int multiplicity_remaining = 1;
  Reality reality = Reality::both;
  /// The jet is itself an exact solution y = jet(x).
  bool exact = false;

  /// Exponent of the last term, 0 for an empty jet.
  Rational last_exponent() const;
  /// Text such as "y = -x + 1*x^(3/2)".
  std::string jet_string() const;
};

/// Finite sum of c * x^e over rational exponents, keyed by e.
using XSeries = std::map<Rational, Rational>;

/// f(x, J(x) + y') as a polynomial in y' whose coefficients are XSeries.
struct ShiftedCurve {
  std::vector<XSeries> y_coeffs;
};

ShiftedCurve shift_curve(const BivarPoly& f);

struct PuiseuxStep {
  Rational exponent;
  AlgebraicNumber root;
  int multiplicity = 1;
  /// Curve after y' -> root * x^exponent + y''; only filled for rational
  /// roots, the only ones expanded further.
  std::optional<ShiftedCurve> transformed;
};

/// One Newton-Puiseux step on g beyond exponent `after`: one entry per
/// distinct root of each edge polynomial with exponent greater than
/// `after`. Throws UnsupportedDegreeError for edge polynomials of degree
/// above 4.
std::vector<PuiseuxStep> newton_puiseux_step(const ShiftedCurve& g, const Rational& after);

/// All pro-branches of f at the origin, each expanded just far enough to
/// differ from every other branch. Requires f(0,0) = 0,
/// f square-free (else MultipleComponentError) and no vertical tangent
/// (else std::invalid_argument; x | f gives VerticalComponentError).
std::vector<PuiseuxBranch> expand_to_separation(const BivarPoly& f);

/// First exponent where the two jets differ (a missing term counts as 0);
/// nullopt when they agree on every listed exponent.
std::optional<Rational> contact_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b);

/// For each sign of x, whether some twist x^(1/m) = zeta*|x|^(1/m) with
/// zeta^m = sign makes every term real.
Reality branch_reality(const PuiseuxBranch& b);

/// Index pairs of branches whose terms are exact complex conjugates and
/// which are complex_only.
std::vector<std::pair<std::size_t, std::size_t>> conjugate_pairs(const std::vector<PuiseuxBranch>& branches);

/// Least power of x in f(x, sum c*x^e) computed exactly in Q(c) for the one
/// possibly irrational coefficient; nullopt when the substitution vanishes.
std::optional<Rational> residual_order(const BivarPoly& f, const std::vector<PuiseuxTerm>& terms);

}  // namespace quartic
