#pragma once

#include <utility>
#include <vector>

#include "quartic/poly.hpp"

namespace quartic {

/// p = unit * prod factor^multiplicity with monic irreducible factors over Q.
struct Factorization {
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly product() const;
};

/// Complete factorization over the rationals for degree <= 4: rational roots
/// give the linear factors, quadratics and cubics without rational roots are
/// irreducible, and a quartic without rational roots splits into two
/// quadratics iff some rational root of its resolvent cubic yields rational
/// quadratic factors. Throws UnsupportedDegreeError beyond degree 4.
Factorization factor_over_q_deg_le4(const UniPoly& p);

/// Irreducible monic factors of a square-free polynomial of degree <= 4.
std::vector<UniPoly> split_squarefree_deg_le4(const UniPoly& p);

/// Deterministic ordering for factor lists: by degree, then coefficients.
bool poly_less(const UniPoly& a, const UniPoly& b);

}  // namespace quartic
