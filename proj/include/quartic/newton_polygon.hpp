#pragma once

#include <utility>
#include <vector>

#include "quartic/bivar.hpp"

namespace quartic {

/// f is divisible by x: a vertical line through the origin is a component.
class VerticalComponentError : public Error {
 public:
  using Error::Error;
};

/// Lowest-degree homogeneous part of f at the origin.
struct TangentCone {
  BivarPoly homogeneous_part;
  int multiplicity = 0;
  /// Irreducible factors over Q, each monic in y (x itself for a vertical
  /// tangent), with multiplicities.
  std::vector<std::pair<BivarPoly, int>> factors;
  /// Multiplicity equals the total degree, so f is a product of lines.
  bool forces_reducible = false;
};

/// Requires f(0,0) = 0 with vanishing gradient; throws NotSingularError
/// otherwise. Tangent cones whose dehomogenization has degree above 4 are
/// split by square-free decomposition only.
TangentCone tangent_cone(const BivarPoly& f);

/// Edge of a lower convex hull of points (j, e_j): e_j is the least power of
/// x in the coefficient of y^j. A root y ~ c*x^exponent lies on the edge.
struct HullEdge {
  int j_low = 0;
  int j_high = 0;
  Rational exponent;
  /// e_j + exponent * j, constant along the edge.
  Rational line_value;
};

/// Edges of positive exponent, starting at the least j and ordered by
/// decreasing exponent. Points must be sorted by j.
std::vector<HullEdge> lower_hull_edges(const std::vector<std::pair<int, Rational>>& points);

struct PolygonSegment {
  /// Lattice endpoints (power of x, power of y), lower y power first.
  std::pair<int, int> start;
  std::pair<int, int> end;
  /// gamma in y ~ c*x^gamma; the segment has slope -1/gamma.
  Rational exponent;
  /// Denominator of gamma.
  int m = 1;
  /// sum over segment points (i, j) of a_ij * z^(j - j_start); z stands
  /// for c. Degree equals the height of the segment.
  UniPoly char_poly;
};

/// Lower-left hull segments of the support of f, ordered by increasing
/// slope magnitude. f must vanish at the origin; throws
/// VerticalComponentError when x divides f.
std::vector<PolygonSegment> newton_polygon(const BivarPoly& f);

bool segment_has_multiple_factor(const PolygonSegment& s);

}  // namespace quartic
