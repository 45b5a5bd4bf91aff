#include "quartic/sturm.hpp"

#include <stdexcept>

namespace quartic {

std::vector<UniPoly> signed_remainder_sequence(const UniPoly& a,
                                               const UniPoly& b) {
  std::vector<UniPoly> seq;
  if (a.is_zero()) return seq;
  seq.push_back(a);
  if (b.is_zero()) return seq;
  seq.push_back(b);
  while (true) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  return signed_remainder_sequence(p, p.derivative());
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations(const std::vector<UniPoly>& seq, const Rational& z) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(sgn(q(z)));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<UniPoly>& seq,
                                bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int sturm_real_root_count(const UniPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  if (!is_squarefree(p))
    throw std::invalid_argument(
        "sturm_real_root_count: polynomial is not square-free");
  if (lo && hi && *lo >= *hi) return 0;
  const auto seq = sturm_sequence(p);
  const int vlo = lo ? sign_variations(seq, *lo)
                     : sign_variations_at_infinity(seq, false);
  const int vhi = hi ? sign_variations(seq, *hi)
                     : sign_variations_at_infinity(seq, true);
  int n = vlo - vhi;  // roots in (lo, hi]
  if (hi && sgn(p(*hi)) == 0) --n;
  return n;
}

namespace {

void isolate_open(const UniPoly& p, const std::vector<UniPoly>& seq,
                  const Rational& a, const Rational& b,
                  std::vector<RealInterval>& out) {
  int n = sign_variations(seq, a) - sign_variations(seq, b);
  if (sgn(p(b)) == 0) --n;
  if (n <= 0) return;
  if (n == 1 && sgn(p(a)) != 0 && sgn(p(b)) != 0) {
    out.push_back({a, b});
    return;
  }
  Rational m = (a + b) / 2;
  isolate_open(p, seq, a, m, out);
  if (sgn(p(m)) == 0) out.push_back({m, m});
  isolate_open(p, seq, m, b, out);
}

}  // namespace

std::vector<RealInterval> isolate_real_roots(const UniPoly& p,
                                             const Rational& lo,
                                             const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolating roots of zero");
  std::vector<RealInterval> out;
  if (p.degree() == 0 || lo > hi) return out;
  if (!is_squarefree(p))
    throw std::invalid_argument("isolate_real_roots: not square-free");
  const auto seq = sturm_sequence(p);
  if (sgn(p(lo)) == 0) out.push_back({lo, lo});
  if (lo < hi) {
    isolate_open(p, seq, lo, hi, out);
    if (sgn(p(hi)) == 0) out.push_back({hi, hi});
  }
  return out;
}

std::vector<RealInterval> isolate_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  Rational b = root_bound(p);
  return isolate_real_roots(p, -b, b);
}

RealInterval refine_real_root(const UniPoly& p, RealInterval iv,
                              const Rational& width) {
  if (iv.exact()) return iv;
  int slo = sgn(p(iv.lo));
  while (iv.width() > width) {
    Rational m = iv.midpoint();
    int sm = sgn(p(m));
    if (sm == 0) return {m, m};
    if (sm != slo) {
      iv.hi = m;
    } else {
      iv.lo = m;
      slo = sm;
    }
  }
  return iv;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  const UniPoly q = primitive_integer_part(squarefree_part(p));
  const Rational lead = q.leading();
  for (auto iv : isolate_real_roots(q)) {
    if (iv.exact()) {
      out.push_back(iv.lo);
      continue;
    }
    // A rational root r = a/b in lowest terms has b | lead, so lead*r is an
    // integer. Narrow the interval until it holds at most one such value.
    iv = refine_real_root(q, iv, Rational(1) / (2 * lead));
    if (iv.exact()) {
      out.push_back(iv.lo);
      continue;
    }
    Rational k = floor_rational(iv.lo * lead) + 1;
    if (k < iv.hi * lead) {
      Rational cand = k / lead;
      if (sgn(q(cand)) == 0) out.push_back(cand);
    }
  }
  return out;
}

}  // namespace quartic
