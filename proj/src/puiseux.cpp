#include "quartic/puiseux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "quartic/factor.hpp"
#include "quartic/newton_polygon.hpp"
#include "quartic/number_field.hpp"

namespace quartic {

namespace {

constexpr int kMaxDepth = 64;

template <class F>
using Series = std::map<Rational, F>;

template <class F>
void add_term(Series<F>& s, const Rational& e, const F& c) {
  if (c == F(0)) return;
  auto [it, inserted] = s.emplace(e, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second == F(0)) s.erase(it);
}

template <class F>
Series<F> multiply(const Series<F>& a, const Series<F>& b) {
  Series<F> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term<F>(out, ea + eb, ca * cb);
  return out;
}

template <class F>
std::optional<Rational> order_of(const Series<F>& s) {
  if (s.empty()) return std::nullopt;
  return s.begin()->first;
}

// sum_j g_j(x) * Y(x)^j.
template <class F>
Series<F> evaluate_at(const std::vector<Series<F>>& g, const Series<F>& y) {
  Series<F> acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = multiply<F>(acc, y);
    for (const auto& [e, c] : *it) add_term<F>(acc, e, c);
  }
  return acc;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// g(x, c*x^gamma + y'').
ShiftedCurve substitute(const ShiftedCurve& g, const Rational& c, const Rational& gamma) {
  const int n = static_cast<int>(g.y_coeffs.size()) - 1;
  ShiftedCurve out;
  out.y_coeffs.resize(g.y_coeffs.size());
  for (int k = 0; k <= n; ++k) {
    const auto& gk = g.y_coeffs[static_cast<std::size_t>(k)];
    if (gk.empty()) continue;
    // Walk j from k down to 0; the factor c^(k-j) grows as j falls.
    Rational cp = 1;
    for (int j = k; j >= 0; --j) {
      const Rational factor = Rational(binomial(k, j)) * cp;
      const Rational shift = gamma * (k - j);
      if (sgn(factor) != 0)
        for (const auto& [e, v] : gk) add_term<Rational>(out.y_coeffs[static_cast<std::size_t>(j)], e + shift, v * factor);
      cp *= c;
    }
  }
  while (!out.y_coeffs.empty() && out.y_coeffs.back().empty()) out.y_coeffs.pop_back();
  return out;
}

std::vector<Series<NumberFieldElem>> lift_curve(const ShiftedCurve& g) {
  std::vector<Series<NumberFieldElem>> out;
  for (const auto& s : g.y_coeffs) {
    Series<NumberFieldElem> t;
    for (const auto& [e, c] : s) t.emplace(e, NumberFieldElem(c));
    out.push_back(std::move(t));
  }
  return out;
}

std::string exponent_string(const Rational& e) {
  if (e == 1) return "x";
  if (e.get_den() == 1) return "x^" + to_string(e);
  return "x^(" + to_string(e) + ")";
}

bool terms_less(const std::vector<PuiseuxTerm>& a, const std::vector<PuiseuxTerm>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].coeff == b[i].coeff) continue;
    return algebraic_less(a[i].coeff, b[i].coeff);
  }
  return false;
}

const AlgebraicNumber* coeff_at(const std::vector<PuiseuxTerm>& terms, const Rational& e) {
  for (const auto& t : terms)
    if (t.exponent == e) return &t.coeff;
  return nullptr;
}

std::optional<Rational> raw_contact(const std::vector<PuiseuxTerm>& a, const std::vector<PuiseuxTerm>& b) {
  std::vector<Rational> exps;
  for (const auto& t : a) exps.push_back(t.exponent);
  for (const auto& t : b) exps.push_back(t.exponent);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  const AlgebraicNumber zero = AlgebraicNumber::from_rational(0);
  for (const auto& e : exps) {
    const AlgebraicNumber* ca = coeff_at(a, e);
    const AlgebraicNumber* cb = coeff_at(b, e);
    if (*(ca ? ca : &zero) != *(cb ? cb : &zero)) return e;
  }
  return std::nullopt;
}

struct RawBranch {
  std::vector<PuiseuxTerm> terms;
  bool exact = false;
};

}  // namespace

std::string to_string(Reality r) {
  switch (r) {
    case Reality::real_for_positive_x: return "real_for_positive_x";
    case Reality::real_for_negative_x: return "real_for_negative_x";
    case Reality::both: return "both";
    case Reality::complex_only: return "complex_only";
  }
  return "unknown";
}

Rational PuiseuxBranch::last_exponent() const {
  return terms.empty() ? Rational(0) : terms.back().exponent;
}

std::string PuiseuxBranch::jet_string() const {
  std::ostringstream os;
  os << "y = ";
  if (terms.empty()) {
    os << "0";
    return os.str();
  }
  bool first = true;
  for (const auto& t : terms) {
    const std::string xe = exponent_string(t.exponent);
    if (t.coeff.is_rational()) {
      const Rational c = t.coeff.rational_value();
      const bool neg = sgn(c) < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      const Rational mag = neg ? Rational(-c) : c;
      if (mag != 1) os << to_string(mag) << "*";
      os << xe;
    } else {
      os << (first ? "" : " + ") << t.coeff.to_string() << "*" << xe;
    }
    first = false;
  }
  return os.str();
}

ShiftedCurve shift_curve(const BivarPoly& f) {
  ShiftedCurve g;
  const auto cy = f.y_coeffs();
  for (const auto& c : cy) {
    XSeries s;
    for (int i = 0; i <= c.degree(); ++i)
      if (sgn(c.coeff(i)) != 0) s.emplace(Rational(i), c.coeff(i));
    g.y_coeffs.push_back(std::move(s));
  }
  return g;
}

std::vector<PuiseuxStep> newton_puiseux_step(const ShiftedCurve& g, const Rational& after) {
  std::vector<std::pair<int, Rational>> points;
  for (std::size_t j = 0; j < g.y_coeffs.size(); ++j)
    if (!g.y_coeffs[j].empty()) points.emplace_back(static_cast<int>(j), g.y_coeffs[j].begin()->first);

  std::vector<PuiseuxStep> out;
  for (const auto& edge : lower_hull_edges(points)) {
    if (edge.exponent <= after) break;
    std::vector<Rational> cp(static_cast<std::size_t>(edge.j_high - edge.j_low) + 1, Rational(0));
    for (int j = edge.j_low; j <= edge.j_high; ++j) {
      const auto& s = g.y_coeffs[static_cast<std::size_t>(j)];
      auto it = s.find(edge.line_value - edge.exponent * j);
      if (it != s.end()) cp[static_cast<std::size_t>(j - edge.j_low)] = it->second;
    }
    const UniPoly P(std::move(cp));
    for (const auto& [phi, k] : factor_over_q_deg_le4(P).factors) {
      if (phi.degree() == 1) {
        const Rational r = -phi.coeff(0) / phi.leading();
        ShiftedCurve next = substitute(g, r, edge.exponent);
        const auto ord = next.y_coeffs.empty() || next.y_coeffs[0].empty()
                             ? std::optional<Rational>()
                             : std::optional<Rational>(next.y_coeffs[0].begin()->first);
        if (ord && *ord <= edge.line_value)
          throw std::logic_error("Newton-Puiseux substitution did not raise the residual order");
        out.push_back({edge.exponent, AlgebraicNumber::from_rational(r), k, std::move(next)});
        continue;
      }
      auto field = std::make_shared<const NumberField>(NumberField{phi.monic()});
      const NumberFieldElem alpha = NumberFieldElem::generator(field);
      Series<NumberFieldElem> lead;
      lead.emplace(edge.exponent, alpha);
      const auto residual = evaluate_at<NumberFieldElem>(lift_curve(g), lead);
      const auto ord = order_of<NumberFieldElem>(residual);
      if (ord && *ord <= edge.line_value)
        throw std::logic_error("Newton-Puiseux root does not cancel the edge terms");
      for (auto& root : AlgebraicNumber::roots_of(phi)) out.push_back({edge.exponent, root, k, std::nullopt});
    }
  }
  return out;
}

std::optional<Rational> contact_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  return raw_contact(a.terms, b.terms);
}

Reality branch_reality(const PuiseuxBranch& b) {
  bool pos = false, neg = false;
  for (int sign = 0; sign < 2; ++sign) {
    for (int k = 0; k < b.m; ++k) {
      const Rational base(2 * k + sign);
      bool real = true;
      for (const auto& t : b.terms) {
        if (t.coeff.is_zero()) continue;
        if (!rotated_is_real(t.coeff, base * t.exponent)) {
          real = false;
          break;
        }
      }
      if (real) {
        (sign == 0 ? pos : neg) = true;
        break;
      }
    }
  }
  if (pos && neg) return Reality::both;
  if (pos) return Reality::real_for_positive_x;
  if (neg) return Reality::real_for_negative_x;
  return Reality::complex_only;
}

std::vector<std::pair<std::size_t, std::size_t>> conjugate_pairs(const std::vector<PuiseuxBranch>& branches) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<bool> used(branches.size(), false);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (used[i] || branches[i].reality != Reality::complex_only) continue;
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (used[j] || branches[j].reality != Reality::complex_only) continue;
      const auto& a = branches[i].terms;
      const auto& b = branches[j].terms;
      if (a.size() != b.size()) continue;
      bool conj = true;
      for (std::size_t t = 0; t < a.size() && conj; ++t)
        conj = a[t].exponent == b[t].exponent && a[t].coeff.conjugate() == b[t].coeff;
      if (!conj) continue;
      out.emplace_back(i, j);
      used[i] = used[j] = true;
      break;
    }
  }
  return out;
}

std::optional<Rational> residual_order(const BivarPoly& f, const std::vector<PuiseuxTerm>& terms) {
  const ShiftedCurve g = shift_curve(f);
  const AlgebraicNumber* irrational = nullptr;
  for (const auto& t : terms) {
    if (t.coeff.is_rational()) continue;
    if (irrational && irrational->minpoly() != t.coeff.minpoly())
      throw UnsupportedTowerDepthError("jet needs more than one algebraic extension");
    irrational = &t.coeff;
  }
  if (!irrational) {
    Series<Rational> y;
    for (const auto& t : terms) add_term<Rational>(y, t.exponent, t.coeff.rational_value());
    return order_of<Rational>(evaluate_at<Rational>(g.y_coeffs, y));
  }
  // Every irrational coefficient is the same root; the field generator
  // stands for it.
  auto field = std::make_shared<const NumberField>(NumberField{irrational->minpoly()});
  const NumberFieldElem alpha = NumberFieldElem::generator(field);
  Series<NumberFieldElem> y;
  for (const auto& t : terms) {
    if (t.coeff.is_rational()) {
      add_term<NumberFieldElem>(y, t.exponent, NumberFieldElem(t.coeff.rational_value()));
    } else {
      if (t.coeff != *irrational)
        throw UnsupportedTowerDepthError("jet mixes conjugate algebraic coefficients");
      add_term<NumberFieldElem>(y, t.exponent, alpha);
    }
  }
  return order_of<NumberFieldElem>(evaluate_at<NumberFieldElem>(lift_curve(g), y));
}

std::vector<PuiseuxBranch> expand_to_separation(const BivarPoly& f) {
  if (f.is_zero() || sgn(f.coeff(0, 0)) != 0) throw std::invalid_argument("origin is not on the curve");
  bool x_divides = true;
  for (const auto& [e, c] : f.terms()) x_divides = x_divides && e.first > 0;
  if (x_divides) throw VerticalComponentError("vertical tangent line component: rotate first");
  if (!is_squarefree(f)) throw MultipleComponentError("curve has a multiple component");
  const int d = f.order();
  if (sgn(f.coeff(0, d)) == 0) throw std::invalid_argument("vertical tangent at the origin: rotate first");

  struct Node {
    ShiftedCurve g;
    std::vector<PuiseuxTerm> jet;
    Rational after;
    int depth;
  };
  std::vector<RawBranch> raw;
  std::vector<Node> stack{{shift_curve(f), {}, Rational(0), 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.depth > kMaxDepth) throw std::logic_error("Newton-Puiseux expansion did not terminate");
    std::size_t j_min = 0;
    while (j_min < node.g.y_coeffs.size() && node.g.y_coeffs[j_min].empty()) ++j_min;
    if (j_min >= 2) throw MultipleComponentError("curve has a multiple component");
    if (j_min == 1) raw.push_back({node.jet, true});
    auto steps = newton_puiseux_step(node.g, node.after);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      auto jet = node.jet;
      jet.push_back({it->exponent, it->root});
      if (it->multiplicity == 1) {
        raw.push_back({std::move(jet), false});
      } else if (it->root.is_rational()) {
        stack.push_back({std::move(*it->transformed), std::move(jet), it->exponent, node.depth + 1});
      } else {
        throw UnsupportedTowerDepthError("repeated irrational Puiseux coefficient needs a second extension");
      }
    }
  }
  if (static_cast<int>(raw.size()) != d)
    throw std::logic_error("pro-branch count differs from the multiplicity");

  const std::size_t n = raw.size();
  std::vector<std::vector<std::optional<Rational>>> contact(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      contact[a][b] = contact[b][a] = raw_contact(raw[a].terms, raw[b].terms);
      if (!contact[a][b]) throw std::logic_error("two pro-branches were not separated");
    }

  std::vector<PuiseuxBranch> out;
  for (std::size_t b = 0; b < n; ++b) {
    PuiseuxBranch br;
    // Only the last raw term can be irrational, so the residual is exact.
    br.exact = raw[b].exact || !residual_order(f, raw[b].terms);
    br.terms = raw[b].terms;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == b) continue;
      const Rational& c = *contact[a][b];
      if (!coeff_at(br.terms, c)) br.terms.push_back({c, AlgebraicNumber::from_rational(0)});
    }
    std::sort(br.terms.begin(), br.terms.end(),
              [](const PuiseuxTerm& x, const PuiseuxTerm& y) { return x.exponent < y.exponent; });
    Integer m = 1;
    for (const auto& t : br.terms) m = lcm(m, t.exponent.get_den());
    br.m = static_cast<int>(m.get_si());
    br.reality = branch_reality(br);
    out.push_back(std::move(br));
  }
  std::sort(out.begin(), out.end(),
            [](const PuiseuxBranch& a, const PuiseuxBranch& b) { return terms_less(a.terms, b.terms); });
  return out;
}

}  // namespace quartic
