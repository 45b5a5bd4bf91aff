#pragma once

// Checks truncated expansions against the real roots of f(x0, y), found by
// exact Sturm isolation. Each branch is evaluated at the principal
// determination of x0^(1/m); its value is real exactly when the pro-branch
// carries the real points on that side of 0.

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/puiseux.hpp"
#include "quartic/sturm.hpp"

namespace oracle {

using quartic::Rational;

struct Report {
  bool ok = true;
  int real_roots = 0;
  int real_branches = 0;
  std::string detail;
};

inline long double to_ld(const Rational& r) {
  // Two-step conversion keeps the extra long double bits.
  const double hi = r.get_d();
  return static_cast<long double>(hi) + static_cast<long double>(Rational(r - Rational(hi)).get_d());
}

// Principal value of sum c * x0^e with x0^(1/m) = |x0|^(1/m) e^{i pi/m} for x0 < 0.
inline std::complex<long double> principal_value(const quartic::PuiseuxBranch& b, const Rational& x0) {
  const long double pi = std::acos(-1.0L);
  const long double ax = std::fabs(to_ld(x0));
  std::complex<long double> sum = 0;
  for (const auto& t : b.terms) {
    if (t.coeff.is_zero()) continue;
    const auto c = t.coeff.approx(Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000));
    const long double mag = std::pow(ax, to_ld(t.exponent));
    const long double arg = sgn(x0) < 0 ? pi * to_ld(t.exponent) : 0.0L;
    sum += c * std::polar(mag, arg);
  }
  return sum;
}

/// Roots of f(x0, .) with |y| < radius must match the real principal values
/// one to one, each within 10 |x0|^(last + 1/m) of its branch.
inline Report check(const quartic::BivarPoly& f, const std::vector<quartic::PuiseuxBranch>& branches,
                    const Rational& x0, const Rational& radius = Rational(1, 100)) {
  Report rep;
  std::ostringstream log;
  const auto g = quartic::squarefree_part(f.restrict_x(x0));

  struct Candidate {
    long double value;
    long double tol;
  };
  std::vector<Candidate> cands;
  long double min_tol = 1;
  for (const auto& b : branches) {
    const long double tol =
        10.0L * std::pow(std::fabs(to_ld(x0)), to_ld(b.last_exponent() + Rational(1, b.m)));
    min_tol = std::min(min_tol, tol);
    const auto v = principal_value(b, x0);
    // Truncations of real pro-branches have exactly real terms, so only
    // rounding separates Im from 0.
    if (std::fabs(v.imag()) <= 1e-15L * std::max(std::fabs(v.real()), tol)) cands.push_back({v.real(), tol});
  }
  rep.real_branches = static_cast<int>(cands.size());

  std::vector<long double> roots;
  for (auto iv : quartic::isolate_real_roots(g, -radius, radius)) {
    iv = quartic::refine_real_root(g, iv, Rational(static_cast<double>(min_tol / 1000)));
    roots.push_back(to_ld(iv.midpoint()));
  }
  rep.real_roots = static_cast<int>(roots.size());

  if (roots.size() != cands.size()) {
    rep.ok = false;
    log << "x0=" << x0 << ": " << roots.size() << " real roots near 0 but " << cands.size()
        << " real branch values; ";
  }
  std::vector<bool> used(roots.size(), false);
  for (const auto& c : cands) {
    int hit = -1, hits = 0;
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (std::fabs(roots[r] - c.value) <= c.tol) {
        ++hits;
        hit = static_cast<int>(r);
      }
    if (hits != 1 || used[static_cast<std::size_t>(hit)]) {
      rep.ok = false;
      log << "x0=" << x0 << ": branch value " << static_cast<double>(c.value) << " matched " << hits
          << " roots; ";
      continue;
    }
    used[static_cast<std::size_t>(hit)] = true;
  }
  rep.detail = log.str();
  return rep;
}

}  // namespace oracle
