#pragma once

#include <random>

#include "quartic/bivar.hpp"

namespace support {

using quartic::BivarPoly;
using quartic::Rational;

inline Rational random_rational(std::mt19937& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

/// Quartic with a00 = a10 = a01 = 0; each other coefficient is zero with
/// probability 1/3, else n/d with |n| <= 9 and d <= 4.
inline BivarPoly random_singular_quartic(std::mt19937& rng) {
  std::uniform_int_distribution<int> keep(0, 2);
  BivarPoly::Terms t;
  for (int d = 2; d <= 4; ++d)
    for (int j = 0; j <= d; ++j) {
      if (keep(rng) == 0) continue;
      const Rational c = random_rational(rng, 9, 4);
      if (sgn(c) != 0) t[{d - j, j}] = c;
    }
  return BivarPoly(t);
}

struct LinearChange {
  Rational a, b, c, d;
  BivarPoly apply(const BivarPoly& f) const { return f.linear_substitute(a, b, c, d); }
};

/// Invertible (x, y) -> (ax + by, cx + dy), entries n/d with |n| <= 5 and
/// d <= 3, such that the image of f has no vertical tangent at the origin.
inline LinearChange random_linear_change(std::mt19937& rng, const BivarPoly& f) {
  for (;;) {
    LinearChange m{random_rational(rng, 5, 3), random_rational(rng, 5, 3), random_rational(rng, 5, 3),
                   random_rational(rng, 5, 3)};
    if (sgn(m.a * m.d - m.b * m.c) == 0) continue;
    const BivarPoly g = m.apply(f);
    if (sgn(g.coeff(0, g.order())) != 0) return m;
  }
}

}  // namespace support
