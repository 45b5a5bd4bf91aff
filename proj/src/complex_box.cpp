#include "quartic/complex_box.hpp"

#include <algorithm>
#include <array>

#include "quartic/sturm.hpp"

namespace quartic {

Box Box::hull(const Box& o) const {
  return {std::min(re_lo, o.re_lo), std::max(re_hi, o.re_hi),
          std::min(im_lo, o.im_lo), std::max(im_hi, o.im_hi)};
}

Box box_add(const Box& a, const Box& b) {
  return {a.re_lo + b.re_lo, a.re_hi + b.re_hi, a.im_lo + b.im_lo,
          a.im_hi + b.im_hi};
}

namespace {

std::pair<Rational, Rational> imul(const Rational& alo, const Rational& ahi,
                                   const Rational& blo, const Rational& bhi) {
  std::array<Rational, 4> p{alo * blo, alo * bhi, ahi * blo, ahi * bhi};
  return {*std::min_element(p.begin(), p.end()),
          *std::max_element(p.begin(), p.end())};
}

}  // namespace

Box box_mul(const Box& a, const Box& b) {
  auto [rr_lo, rr_hi] = imul(a.re_lo, a.re_hi, b.re_lo, b.re_hi);
  auto [ii_lo, ii_hi] = imul(a.im_lo, a.im_hi, b.im_lo, b.im_hi);
  auto [ri_lo, ri_hi] = imul(a.re_lo, a.re_hi, b.im_lo, b.im_hi);
  auto [ir_lo, ir_hi] = imul(a.im_lo, a.im_hi, b.re_lo, b.re_hi);
  return {rr_lo - ii_hi, rr_hi - ii_lo, ri_lo + ir_lo, ri_hi + ir_hi};
}

namespace {

int quadrant(int su, int sv) {
  if (su > 0) return sv > 0 ? 0 : 3;
  return sv > 0 ? 1 : 2;
}

// Appends the quadrants of p along z0 + t*d, t in [0, 1]. False when the
// edge is unusable.
bool edge_quadrants(const UniPoly& p, const GaussRational& z0,
                    const GaussRational& d, std::vector<int>& out) {
  Poly<GaussRational> along;
  const Poly<GaussRational> lin{z0, d};
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    along = along * lin + Poly<GaussRational>::constant(GaussRational(*it));
  std::vector<Rational> ure, vim;
  for (const auto& c : along.coefficients()) {
    ure.push_back(c.re);
    vim.push_back(c.im);
  }
  const UniPoly u(std::move(ure)), v(std::move(vim));
  if (u.is_zero() || v.is_zero()) return false;
  const Rational zero(0), one(1);
  const UniPoly common = gcd(u, v);
  if (common.degree() >= 1 &&
      !isolate_real_roots(squarefree_part(common), zero, one).empty())
    return false;
  const UniPoly w = u * v;
  std::vector<RealInterval> roots;
  if (w.degree() >= 1) roots = isolate_real_roots(squarefree_part(w), zero, one);
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back(Rational(1, 2));
  } else {
    const auto& first = roots.front();
    if (!first.exact())
      samples.push_back(first.lo);
    else if (sgn(first.lo) > 0)
      samples.push_back(first.lo / 2);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (!roots[i].exact())
        samples.push_back(roots[i].hi);
      else if (!roots[i + 1].exact())
        samples.push_back(roots[i + 1].lo);
      else
        samples.push_back((roots[i].lo + roots[i + 1].lo) / 2);
    }
    const auto& last = roots.back();
    if (!last.exact())
      samples.push_back(last.hi);
    else if (last.lo < one)
      samples.push_back((last.lo + one) / 2);
  }
  for (const auto& t : samples) out.push_back(quadrant(sgn(u(t)), sgn(v(t))));
  return true;
}

}  // namespace

std::optional<int> count_roots_in_box(const UniPoly& p, const Box& box) {
  if (p.is_zero()) return std::nullopt;
  if (sgn(box.re_width()) <= 0 || sgn(box.im_width()) <= 0) return std::nullopt;
  if (p.degree() == 0) return 0;
  const Rational w = box.re_width(), h = box.im_width();
  const std::array<std::pair<GaussRational, GaussRational>, 4> edges{{
      {{box.re_lo, box.im_lo}, {w, 0}},
      {{box.re_hi, box.im_lo}, {0, h}},
      {{box.re_hi, box.im_hi}, {-w, 0}},
      {{box.re_lo, box.im_hi}, {0, -h}},
  }};
  std::vector<int> quads;
  for (const auto& [z0, d] : edges)
    if (!edge_quadrants(p, z0, d, quads)) return std::nullopt;
  int turns = 0;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    int step = (quads[(i + 1) % quads.size()] - quads[i] + 4) % 4;
    if (step == 1) ++turns;
    else if (step == 3) --turns;
    else if (step == 2) return std::nullopt;
  }
  if (turns % 4 != 0 || turns < 0) return std::nullopt;
  return turns / 4;
}

}  // namespace quartic
