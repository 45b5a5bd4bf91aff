#include "quartic/newton_polygon.hpp"

#include <map>
#include <stdexcept>

#include "quartic/factor.hpp"

namespace quartic {

namespace {

// x^deg(phi) * phi(y/x) for phi monic in z.
BivarPoly homogenize(const UniPoly& phi) {
  BivarPoly out;
  const int d = phi.degree();
  for (int k = 0; k <= d; ++k) out += BivarPoly::monomial(phi.coeff(k), d - k, k);
  return out;
}

}  // namespace

TangentCone tangent_cone(const BivarPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("tangent cone of the zero polynomial");
  if (sgn(f.coeff(0, 0)) != 0) throw NotSingularError("origin is not on the curve");
  if (sgn(f.coeff(1, 0)) != 0 || sgn(f.coeff(0, 1)) != 0)
    throw NotSingularError("not a singular point: the gradient does not vanish");

  TangentCone tc;
  tc.multiplicity = f.order();
  tc.homogeneous_part = f.homogeneous_part(tc.multiplicity);
  tc.forces_reducible = tc.multiplicity == f.total_degree();

  std::vector<Rational> h(static_cast<std::size_t>(tc.multiplicity) + 1, Rational(0));
  for (const auto& [e, c] : tc.homogeneous_part.terms()) h[static_cast<std::size_t>(e.second)] = c;
  const UniPoly hz(h);
  const int vertical = tc.multiplicity - hz.degree();
  if (vertical > 0) tc.factors.emplace_back(BivarPoly::x(), vertical);

  std::vector<std::pair<UniPoly, int>> parts;
  if (hz.degree() <= 4) {
    parts = factor_over_q_deg_le4(hz).factors;
  } else {
    parts = squarefree_decomposition(hz);
  }
  for (const auto& [phi, k] : parts) tc.factors.emplace_back(homogenize(phi), k);
  return tc;
}

std::vector<HullEdge> lower_hull_edges(const std::vector<std::pair<int, Rational>>& points) {
  std::vector<HullEdge> edges;
  if (points.empty()) return edges;
  std::size_t cur = 0;
  while (cur + 1 < points.size()) {
    std::size_t best = cur;
    Rational best_gamma;
    for (std::size_t k = cur + 1; k < points.size(); ++k) {
      const Rational gamma = (points[cur].second - points[k].second) / (points[k].first - points[cur].first);
      // Ties go to the farther point so collinear points join one edge.
      if (best == cur || gamma >= best_gamma) {
        best = k;
        best_gamma = gamma;
      }
    }
    if (sgn(best_gamma) <= 0) break;
    edges.push_back({points[cur].first, points[best].first, best_gamma,
                     points[cur].second + best_gamma * points[cur].first});
    cur = best;
  }
  return edges;
}

std::vector<PolygonSegment> newton_polygon(const BivarPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  if (sgn(f.coeff(0, 0)) != 0) throw std::invalid_argument("origin is not on the curve");
  bool has_pure_y = false;
  std::map<int, int> least_x;  // y power -> least x power
  for (const auto& [e, c] : f.terms()) {
    if (e.first == 0) has_pure_y = true;
    auto it = least_x.find(e.second);
    if (it == least_x.end() || e.first < it->second) least_x[e.second] = e.first;
  }
  if (!has_pure_y) throw VerticalComponentError("vertical tangent line component: rotate first");

  std::vector<std::pair<int, Rational>> points;
  for (const auto& [j, i] : least_x) points.emplace_back(j, Rational(i));
  std::vector<PolygonSegment> out;
  for (const auto& edge : lower_hull_edges(points)) {
    PolygonSegment s;
    const int i_low = least_x.at(edge.j_low);
    const int i_high = least_x.at(edge.j_high);
    s.start = {i_low, edge.j_low};
    s.end = {i_high, edge.j_high};
    s.exponent = edge.exponent;
    s.m = static_cast<int>(edge.exponent.get_den().get_si());
    std::vector<Rational> cp(static_cast<std::size_t>(edge.j_high - edge.j_low) + 1, Rational(0));
    for (const auto& [e, c] : f.terms())
      if (Rational(e.first) + edge.exponent * e.second == edge.line_value)
        cp[static_cast<std::size_t>(e.second - edge.j_low)] = c;
    s.char_poly = UniPoly(std::move(cp));
    out.push_back(std::move(s));
  }
  return out;
}

bool segment_has_multiple_factor(const PolygonSegment& s) {
  return gcd(s.char_poly, s.char_poly.derivative()).degree() > 0;
}

}  // namespace quartic
