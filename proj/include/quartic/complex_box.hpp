#pragma once

#include <optional>

#include "quartic/poly.hpp"

namespace quartic {

/// Exact complex number with rational parts.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int v) : re(v), im(0) {}  // NOLINT: ring literal
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Closed axis-aligned rectangle with rational corners.
struct Box {
  Rational re_lo, re_hi, im_lo, im_hi;

  Rational re_width() const { return re_hi - re_lo; }
  Rational im_width() const { return im_hi - im_lo; }
  Rational width() const { return re_width() > im_width() ? re_width() : im_width(); }
  Rational re_mid() const { return (re_lo + re_hi) / 2; }
  Rational im_mid() const { return (im_lo + im_hi) / 2; }
  bool meets_real_axis() const { return sgn(im_lo) <= 0 && sgn(im_hi) >= 0; }
  bool contains(const Box& o) const {
    return re_lo <= o.re_lo && o.re_hi <= re_hi && im_lo <= o.im_lo && o.im_hi <= im_hi;
  }
  bool disjoint(const Box& o) const {
    return re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo;
  }
  /// Reflection across the real axis.
  Box mirrored() const { return {re_lo, re_hi, -im_hi, -im_lo}; }
  /// Smallest box containing both.
  Box hull(const Box& o) const;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Interval-arithmetic enclosures of sums and products of the complex
/// numbers ranging over two boxes.
Box box_add(const Box& a, const Box& b);
Box box_mul(const Box& a, const Box& b);

/// Number of roots of p (with multiplicity) strictly inside the box, by the
/// argument principle evaluated exactly: the winding of p around 0 along the
/// boundary is read off quadrant transitions at rational sample points that
/// separate the real roots of Re(p)*Im(p) on each edge. nullopt when p
/// vanishes on the boundary, the box is degenerate, or p is identically real
/// or imaginary along an edge.
std::optional<int> count_roots_in_box(const UniPoly& p, const Box& box);

}  // namespace quartic
