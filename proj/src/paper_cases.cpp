#include "quartic/paper_cases.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace quartic {

namespace {

BivarPoly mono(const Rational& c, int i, int j) { return BivarPoly::monomial(c, i, j); }
BivarPoly cst(const Rational& c) { return BivarPoly::constant(c); }
const BivarPoly& X() { static const BivarPoly x = BivarPoly::x(); return x; }
const BivarPoly& Y() { static const BivarPoly y = BivarPoly::y(); return y; }

/// Sum of p[names[k]] x^(d-k) y^k, k = 0..d.
BivarPoly form(const Params& p, int d, const std::string& names) {
  BivarPoly r;
  for (int k = 0; k <= d; ++k) r += mono(p.at(std::string(1, names.at(static_cast<std::size_t>(k)))), d - k, k);
  return r;
}

std::vector<std::string> letters(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

bool nonzero(const Params& p, const char* name) { return sgn(p.at(name)) != 0; }

/// The line y = x divides g.
bool divisible_by_diagonal(const BivarPoly& g) {
  return g.linear_substitute(Rational(1), Rational(0), Rational(1), Rational(0)).is_zero();
}

Expectation named(const std::string& name, const std::string& type) { return {name, type, {name}, {}}; }

/// y + a x^2 + b xy + c y^2 with the given letters.
BivarPoly conic(const Params& p, const char* a, const char* b, const char* c) {
  return Y() + mono(p.at(a), 2, 0) + mono(p.at(b), 1, 1) + mono(p.at(c), 0, 2);
}

std::vector<FamilyCase> build_registry() {
  std::vector<FamilyCase> cases;
  auto always = [](const Params&) { return true; };

  // Multiplicity 3, irreducible: cubic tangent cone plus a generic quartic part.
  const auto quartic_part = [](const Params& p) { return form(p, 4, "abcde"); };
  struct Cone { const char* id; const char* text; BivarPoly (*cone)(); const char* name; const char* type; };
  const Cone cones[] = {
      {"e6", "y^3", [] { return Y().pow(3); }, "E6", "irreducible Type 1"},
      {"d5", "y^2 (y - x)", [] { return Y().pow(2) * (Y() - X()); }, "D5", "irreducible Type 2"},
      {"d4", "y (y - x) (y + x)", [] { return Y() * (Y() - X()) * (Y() + X()); }, "D4", "irreducible Type 3"},
      {"d4-star", "y (y^2 + x^2)", [] { return Y() * (Y().pow(2) + X().pow(2)); }, "D4*", "irreducible Type 4"},
  };
  for (const auto& c : cones) {
    auto cone = c.cone;
    cases.push_back({c.id, std::string(c.text) + " + a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4", letters("abcde"),
                     [cone, quartic_part](const Params& p) { return cone() + quartic_part(p); }, {}, "a != 0",
                     [](const Params& p) { return nonzero(p, "a"); }, "", always, named(c.name, c.type), {}, {}});
  }

  // Multiplicity 2 with distinct tangents or a cusp.
  const auto tail = [](const Params& p) { return form(p, 3, "abcd") + form(p, 4, "efghi"); };
  const std::string tail_text = " + a x^3 + b x^2 y + c x y^2 + d y^3 + e x^4 + f x^3 y + g x^2 y^2 + h x y^3 + i y^4";
  cases.push_back({"a1", "y^2 - x^2" + tail_text, letters("abcdefghi"),
                   [tail](const Params& p) { return Y().pow(2) - X().pow(2) + tail(p); }, {}, "", always, "", always,
                   named("A1", "irreducible Type 5"), {}, {}});
  cases.push_back({"a1-star", "y^2 + x^2" + tail_text, letters("abcdefghi"),
                   [tail](const Params& p) { return Y().pow(2) + X().pow(2) + tail(p); }, {}, "", always, "", always,
                   named("A1*", "irreducible Type 6"), {}, {}});
  cases.push_back({"a2", "y^2" + tail_text, letters("abcdefghi"),
                   [tail](const Params& p) { return Y().pow(2) + tail(p); }, {}, "", always, "a != 0",
                   [](const Params& p) { return nonzero(p, "a"); }, named("A2", "irreducible Type 7"),
                   [](Params& p) { p["a"] = 0; }, {}});

  // Tangent cone y^2 with the quasi-homogeneous part of weight 4.
  const auto weight_tail = [](const Params& p) {
    return mono(p.at("a"), 3, 1) + mono(p.at("b"), 1, 2) + mono(p.at("c"), 2, 2) + mono(p.at("d"), 0, 3) +
           mono(p.at("e"), 1, 3) + mono(p.at("f"), 0, 4);
  };
  const std::string weight_text = " + a x^3 y + b x y^2 + c x^2 y^2 + d y^3 + e x y^3 + f y^4";
  const BivarPoly square = (Y() + X().pow(2)).pow(2);
  cases.push_back({"a3", "(y + x^2)(y - x^2)" + weight_text, letters("abcdef"),
                   [weight_tail](const Params& p) { return (Y() + X().pow(2)) * (Y() - X().pow(2)) + weight_tail(p); },
                   {}, "", always, "", always, named("A3", "irreducible Type 8"), {}, {}});
  cases.push_back({"a3-star", "y^2 + x^4" + weight_text, letters("abcdef"),
                   [weight_tail](const Params& p) { return Y().pow(2) + X().pow(4) + weight_tail(p); }, {}, "",
                   always, "", always, named("A3*", "irreducible Type 9"), {}, {}});

  const auto tower = [weight_tail, square](const Params& p) { return square + weight_tail(p); };
  const std::string tower_text = "(y + x^2)^2" + weight_text;
  const auto a_eq_b = [](Params& p) { p["a"] = p.at("b"); };
  const auto c_critical = [a_eq_b](Params& p) {
    a_eq_b(p);
    p["c"] = p.at("b") * p.at("b") / 4 + p.at("d");
  };
  const auto e_critical = [c_critical](Params& p) {
    c_critical(p);
    p["e"] = p.at("b") * p.at("d") / 2;
  };
  const auto discriminant = [](const Params& p) { return sgn(p.at("b") * p.at("b") - 4 * (p.at("c") - p.at("d"))); };

  cases.push_back({"a4", tower_text, letters("abcdef"), tower, {}, "", always, "a != b",
                   [](const Params& p) { return p.at("a") != p.at("b"); }, named("A4", "irreducible Type 10"), a_eq_b,
                   {}});
  cases.push_back({"a5", tower_text, letters("bcdef"), tower, a_eq_b, "", always,
                   "a = b, b^2 - 4(c - d) > 0", [discriminant](const Params& p) { return discriminant(p) > 0; },
                   named("A5", "irreducible Type 11"), c_critical, false});
  cases.push_back({"a5-star", tower_text, letters("bcdef"), tower, a_eq_b, "", always,
                   "a = b, b^2 - 4(c - d) < 0", [discriminant](const Params& p) { return discriminant(p) < 0; },
                   named("A5*", "irreducible Type 12"), c_critical, true});
  cases.push_back({"a6", tower_text, letters("bdef"), tower, c_critical, "", always,
                   "a = b, c = b^2/4 + d, e != bd/2",
                   [](const Params& p) { return p.at("e") != p.at("b") * p.at("d") / 2; },
                   named("A6", "irreducible Type 13"), e_critical, {}});
  cases.push_back({"h-reducible", tower_text, letters("bdf"), tower, e_critical, "", always,
                   "a = b, c = b^2/4 + d, e = bd/2", always,
                   {"reducible", "irreducible Type 13 degenerate", {"A7", "A7*", "multiple-component"},
                    [tower](const Params& p) {
                      const BivarPoly u = 2 * X().pow(2) + mono(p.at("b"), 1, 1) + 2 * Y();
                      const BivarPoly quadratic_form = Rational(1, 4) * u * u +
                                                       Rational(p.at("d") / 2) * u * Y().pow(2) +
                                                       mono(p.at("f"), 0, 4);
                      return tower(p) == quadratic_form;
                    }},
                   {}, {}});

  // Cubic and a line.
  const auto cubic = [](const Params& p) { return form(p, 3, "abcd"); };
  const std::string cubic_text = " + a x^3 + b x^2 y + c x y^2 + d y^3";
  const auto off_line = [](const Params& p) { return cst(1) + mono(p.at("e"), 1, 0) + mono(p.at("f"), 0, 1); };
  cases.push_back({"cubic-node-line-off", "(y^2 - x^2" + cubic_text + ")(1 + e x + f y)", letters("abcdef"),
                   [cubic, off_line](const Params& p) { return (Y().pow(2) - X().pow(2) + cubic(p)) * off_line(p); },
                   {}, "", always, "", always, named("A1", "reducible Type 1"), {}, {}});
  cases.push_back({"cubic-acnode-line-off", "(y^2 + x^2" + cubic_text + ")(1 + e x + f y)", letters("abcdef"),
                   [cubic, off_line](const Params& p) { return (Y().pow(2) + X().pow(2) + cubic(p)) * off_line(p); },
                   {}, "", always, "", always, named("A1*", "reducible Type 2"), {}, {}});
  cases.push_back({"cubic-cusp-line-off", "(y^2" + cubic_text + ")(1 + e x + f y)", letters("abcdef"),
                   [cubic, off_line](const Params& p) { return (Y().pow(2) + cubic(p)) * off_line(p); }, {}, "a != 0",
                   [](const Params& p) { return nonzero(p, "a"); }, "", always, named("A2", "reducible Type 3"), {},
                   {}});
  cases.push_back({"cusp-transverse-line", "(y^2" + cubic_text + ")(y - x)", letters("abcd"),
                   [cubic](const Params& p) { return (Y().pow(2) + cubic(p)) * (Y() - X()); }, {}, "a != 0",
                   [](const Params& p) { return nonzero(p, "a"); }, "", always, named("D5", "reducible Type 4"), {},
                   {}});
  cases.push_back({"cusp-tangent-line", "(y^2" + cubic_text + ") y", letters("abcd"),
                   [cubic](const Params& p) { return (Y().pow(2) + cubic(p)) * Y(); }, {}, "a != 0",
                   [](const Params& p) { return nonzero(p, "a"); }, "", always, named("E7", "reducible Type 5"), {},
                   {}});
  cases.push_back({"node-transverse-line", "(y^2 - x^2" + cubic_text + ")(y - 2x)", letters("abcd"),
                   [cubic](const Params& p) { return (Y().pow(2) - X().pow(2) + cubic(p)) * (Y() - 2 * X()); }, {},
                   "", always, "", always, named("D4", "reducible Type 6"), {}, {}});
  const auto node_cubic = [cubic](const Params& p) { return Y().pow(2) - X().pow(2) + cubic(p); };
  const auto d_flat = [](Params& p) { p["d"] = -p.at("a") - p.at("b") - p.at("c"); };
  cases.push_back({"node-tangent-line", "(y^2 - x^2" + cubic_text + ")(y - x)", letters("abcd"),
                   [node_cubic](const Params& p) { return node_cubic(p) * (Y() - X()); }, {}, "", always,
                   "a + b + c + d != 0",
                   [](const Params& p) { return sgn(p.at("a") + p.at("b") + p.at("c") + p.at("d")) != 0; },
                   named("D6", "reducible Type 7"), d_flat, {}});
  cases.push_back({"node-tangent-line-degenerate", "(y^2 - x^2" + cubic_text + ")(y - x)", letters("abc"),
                   [node_cubic](const Params& p) { return node_cubic(p) * (Y() - X()); }, d_flat, "", always,
                   "a + b + c + d = 0", always,
                   {"reducible", "reducible Type 7 degenerate", {"multiple-component"},
                    [node_cubic](const Params& p) { return divisible_by_diagonal(node_cubic(p)); }},
                   {}, {}});
  cases.push_back({"acnode-line", "(y^2 + x^2" + cubic_text + ")(y - x)", letters("abcd"),
                   [cubic](const Params& p) { return (Y().pow(2) + X().pow(2) + cubic(p)) * (Y() - X()); }, {}, "",
                   always, "", always, named("D4*", "reducible Type 8"), {}, {}});

  const auto smooth_cubic = [](const Params& p) { return Y() - X() + form(p, 2, "abc") + form(p, 3, "defg"); };
  const std::string smooth_text = "(y - x + a x^2 + b x y + c y^2 + d x^3 + e x^2 y + f x y^2 + g y^3)(y - x)";
  const auto c_flat = [](Params& p) { p["c"] = -p.at("a") - p.at("b"); };
  const auto g_flat = [c_flat](Params& p) {
    c_flat(p);
    p["g"] = -p.at("d") - p.at("e") - p.at("f");
  };
  const auto smooth_product = [smooth_cubic](const Params& p) { return smooth_cubic(p) * (Y() - X()); };
  cases.push_back({"smooth-cubic-tangent", smooth_text, letters("abcdefg"), smooth_product, {}, "", always,
                   "a + b + c != 0", [](const Params& p) { return sgn(p.at("a") + p.at("b") + p.at("c")) != 0; },
                   named("A3", "reducible Type 9"), c_flat, false});
  cases.push_back({"smooth-cubic-inflection", smooth_text, letters("abdefg"), smooth_product, c_flat, "", always,
                   "a + b + c = 0, d + e + f + g != 0",
                   [](const Params& p) { return sgn(p.at("d") + p.at("e") + p.at("f") + p.at("g")) != 0; },
                   named("A5", "reducible Type 10"), g_flat, false});
  cases.push_back({"smooth-cubic-degenerate", smooth_text, letters("abdef"), smooth_product, g_flat, "", always,
                   "a + b + c = 0, d + e + f + g = 0", always,
                   {"reducible", "reducible Type 10 degenerate", {"multiple-component"},
                    [smooth_cubic](const Params& p) { return divisible_by_diagonal(smooth_cubic(p)); }},
                   {}, {}});

  // Two conics. A conjugate pair y + (a + p i) x^2 + (b + q i) xy + (c + r i) y^2 and
  // its conjugate multiply to (y + a x^2 + b xy + c y^2)^2 + (p x^2 + q xy + r y^2)^2.
  const auto conjugate_conics = [](const Params& p) {
    const BivarPoly re = conic(p, "a", "b", "c");
    const BivarPoly im = form(p, 2, "pqr");
    return re * re + im * im;
  };
  const std::string conj_text = "(y + a x^2 + b x y + c y^2)^2 + (p x^2 + q x y + r y^2)^2";
  const std::string real_text = "(y + a x^2 + b x y + c y^2)(y + d x^2 + e x y + f y^2)";
  const auto real_conics = [](const Params& p) { return conic(p, "a", "b", "c") * conic(p, "d", "e", "f"); };
  const auto ad_nonzero = [](const Params& p) { return nonzero(p, "a") && nonzero(p, "d"); };
  const auto a_nonzero = [](const Params& p) { return nonzero(p, "a"); };

  cases.push_back({"conics-transverse", "(y - x + a x^2 + b x y + c y^2)(y + x + d x^2 + e x y + f y^2)",
                   letters("abcdef"),
                   [](const Params& p) {
                     return (Y() - X() + form(p, 2, "abc")) * (Y() + X() + form(p, 2, "def"));
                   },
                   {}, "", always, "", always, named("A1", "reducible Type 1 (conics)"), {}, {}});
  cases.push_back({"conics-transverse-conjugate", "y^2 + x^2 (1 + a x + b y)^2", letters("ab"),
                   [](const Params& p) {
                     return Y().pow(2) + X().pow(2) * (cst(1) + mono(p.at("a"), 1, 0) + mono(p.at("b"), 0, 1)).pow(2);
                   },
                   {}, "", always, "", always, named("A1*", "reducible Type 2 (conics)"), {}, {}});
  cases.push_back({"conics-tangent", real_text, letters("abcdef"), real_conics, {}, "a != 0, d != 0", ad_nonzero,
                   "a != d", [](const Params& p) { return p.at("a") != p.at("d"); },
                   named("A3", "reducible Type 9 or Type 11"), [](Params& p) { p["d"] = p.at("a"); }, false});
  cases.push_back({"conics-tangent-conjugate", conj_text, letters("abcpqr"), conjugate_conics, {}, "a != 0",
                   a_nonzero, "p != 0", [](const Params& p) { return nonzero(p, "p"); },
                   named("A3*", "reducible Type 9 or Type 11"), [](Params& p) { p["p"] = 0; }, true});
  cases.push_back({"conics-osculating", real_text, letters("abcef"), real_conics,
                   [](Params& p) { p["d"] = p.at("a"); }, "a != 0", a_nonzero, "a = d, b != e",
                   [](const Params& p) { return p.at("b") != p.at("e"); },
                   named("A5", "reducible Type 10 or Type 12"), [](Params& p) { p["e"] = p.at("b"); }, false});
  cases.push_back({"conics-osculating-conjugate", conj_text, letters("abcqr"), conjugate_conics,
                   [](Params& p) { p["p"] = 0; }, "a != 0", a_nonzero, "p = 0, q != 0",
                   [](const Params& p) { return nonzero(p, "q"); }, named("A5*", "reducible Type 10 or Type 12"),
                   [](Params& p) { p["q"] = 0; }, true});
  cases.push_back({"conics-hyperosculating", real_text, letters("abcf"), real_conics,
                   [](Params& p) {
                     p["d"] = p.at("a");
                     p["e"] = p.at("b");
                   },
                   "a != 0", a_nonzero, "a = d, b = e, c != f",
                   [](const Params& p) { return p.at("c") != p.at("f"); },
                   named("A7", "reducible Type 13 or Type 14"), [](Params& p) { p["f"] = p.at("c"); }, false});
  cases.push_back({"conics-hyperosculating-conjugate", conj_text, letters("abcr"), conjugate_conics,
                   [](Params& p) {
                     p["p"] = 0;
                     p["q"] = 0;
                   },
                   "a != 0", a_nonzero, "p = q = 0, r != 0", [](const Params& p) { return nonzero(p, "r"); },
                   named("A7*", "reducible Type 13 or Type 14"), [](Params& p) { p["r"] = 0; }, true});

  // A conic and two lines: fixed representatives.
  struct Fixed { const char* id; const char* text; BivarPoly (*curve)(); const char* name; const char* type; };
  const Fixed fixed[] = {
      {"conic-lines-a1", "(y - x)(y + x)(x^2 + y^2 - 4)",
       [] { return (Y() - X()) * (Y() + X()) * (X().pow(2) + Y().pow(2) - cst(4)); }, "A1", "reducible Type 1"},
      {"conic-line-a1", "(y - x^2)(y + x)(y - 3)", [] { return (Y() - X().pow(2)) * (Y() + X()) * (Y() - cst(3)); },
       "A1", "reducible Type 1"},
      {"conic-lines-a1-star", "(x^2 + y^2)(x - 1)(y - 1)",
       [] { return (X().pow(2) + Y().pow(2)) * (X() - cst(1)) * (Y() - cst(1)); }, "A1*", "reducible Type 2"},
      {"conic-lines-a3", "y (y - x^2)(x - 2)", [] { return Y() * (Y() - X().pow(2)) * (X() - cst(2)); }, "A3",
       "reducible Type 9"},
      {"conic-lines-d4", "(y - x^2)(y - x)(y + x)", [] { return (Y() - X().pow(2)) * (Y() - X()) * (Y() + X()); },
       "D4", "reducible Type 6"},
      {"conic-lines-d4-star", "(x^2 + y^2)(y - x)(y - 1)",
       [] { return (X().pow(2) + Y().pow(2)) * (Y() - X()) * (Y() - cst(1)); }, "D4*", "reducible Type 8"},
      {"conic-lines-d6", "y (y - x)(y - x^2)", [] { return Y() * (Y() - X()) * (Y() - X().pow(2)); }, "D6",
       "reducible Type 7"},
  };
  for (const auto& f : fixed) {
    auto curve = f.curve;
    cases.push_back({f.id, f.text, {}, [curve](const Params&) { return curve(); }, {}, "", always, "", always,
                     named(f.name, f.type), {}, {}});
  }

  // Four lines through the origin.
  const auto line = [](const Params& p, const char* s) { return Y() - mono(p.at(s), 1, 0); };
  const auto pair = [](const Params& p, const char* s, const char* t) {
    return (Y() - mono(p.at(s), 1, 0)).pow(2) + mono(p.at(t), 2, 0);
  };
  cases.push_back({"four-lines", "(y - a x)(y - b x)(y - c x)(y - d x)", letters("abcd"),
                   [line](const Params& p) { return line(p, "a") * line(p, "b") * line(p, "c") * line(p, "d"); }, {},
                   "a, b, c, d distinct",
                   [](const Params& p) {
                     std::vector<Rational> v{p.at("a"), p.at("b"), p.at("c"), p.at("d")};
                     std::sort(v.begin(), v.end());
                     return std::adjacent_find(v.begin(), v.end()) == v.end();
                   },
                   "", always, named("X9", "reducible Type 15"), {}, {}});
  cases.push_back({"two-lines-conjugate-pair", "(y - a x)(y - b x)((y - c x)^2 + d x^2)", letters("abcd"),
                   [line, pair](const Params& p) { return line(p, "a") * line(p, "b") * pair(p, "c", "d"); }, {},
                   "a != b, d > 0", [](const Params& p) { return p.at("a") != p.at("b") && sgn(p.at("d")) > 0; }, "",
                   always, named("X9*", "reducible Type 16"), {}, {}});
  cases.push_back({"two-conjugate-pairs", "((y - a x)^2 + b x^2)((y - c x)^2 + d x^2)", letters("abcd"),
                   [pair](const Params& p) { return pair(p, "a", "b") * pair(p, "c", "d"); }, {},
                   "b > 0, d > 0, (a, b) != (c, d)",
                   [](const Params& p) {
                     return sgn(p.at("b")) > 0 && sgn(p.at("d")) > 0 &&
                            (p.at("a") != p.at("c") || p.at("b") != p.at("d"));
                   },
                   "", always, named("X9**", "reducible Type 17"), {}, {}});

  const std::map<std::string, std::vector<std::string>> cascades{
      {"a2", {"a3", "a3-star", "a4", "a5", "a5-star", "a6", "h-reducible", "square"}},
      {"a4", {"a5", "a5-star", "a6", "h-reducible"}},
      {"a5", {"a6", "h-reducible"}},
      {"a5-star", {"a6", "h-reducible"}},
      {"a6", {"h-reducible"}},
      {"node-tangent-line", {"node-tangent-line-degenerate"}},
      {"smooth-cubic-tangent", {"smooth-cubic-inflection", "smooth-cubic-degenerate"}},
      {"smooth-cubic-inflection", {"smooth-cubic-degenerate"}},
      {"conics-tangent", {"conics-osculating", "conics-hyperosculating", "square"}},
      {"conics-tangent-conjugate", {"conics-osculating-conjugate", "conics-hyperosculating-conjugate", "square"}},
      {"conics-osculating", {"conics-hyperosculating", "square"}},
      {"conics-osculating-conjugate", {"conics-hyperosculating-conjugate", "square"}},
      {"conics-hyperosculating", {"square"}},
      {"conics-hyperosculating-conjugate", {"square"}},
  };
  for (auto& c : cases) {
    const auto it = cascades.find(c.id);
    if (it != cascades.end()) c.cascade = it->second;
  }
  return cases;
}

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return h;
}

Rational draw(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 8);
  return Rational(num(rng)) / Rational(den(rng));
}

std::string outcome(const BivarPoly& f) {
  try {
    const auto rec = classify(f);
    return rec.arnold_name ? *rec.arnold_name : "unnamed:" + rec.diagram_key;
  } catch (const MultipleComponentError&) {
    return "multiple-component";
  } catch (const NotSingularError&) {
    return "not-singular";
  }
}

bool has_conjugate_pair(const BivarPoly& f) { return !conjugate_pairs(classify(f).branches).empty(); }

/// Parameters satisfying guard and condition, derived ones filled in.
Params draw_admissible(const FamilyCase& c, std::mt19937& rng, bool complement) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Params p;
    for (const auto& name : c.params) p[name] = draw(rng);
    if (c.derive) c.derive(p);
    if (!c.guard(p) || !c.condition(p)) continue;
    if (complement) {
      c.violate(p);
      if (!c.guard(p) || c.condition(p)) continue;
    }
    return p;
  }
  throw std::runtime_error("no admissible parameters for " + c.id);
}

}  // namespace

namespace {

bool lands_in_cascade(const FamilyCase& c, const Params& p, const BivarPoly& f, const std::string& got) {
  for (const auto& id : c.cascade) {
    if (id == "square") {
      if (got == "multiple-component" && !is_squarefree(f)) return true;
      continue;
    }
    const FamilyCase& next = find_case(id);
    const auto& ok = next.expected.outcomes;
    if (std::find(ok.begin(), ok.end(), got) == ok.end()) continue;
    if (!next.expected.reducible || next.expected.reducible(p)) return true;
  }
  return false;
}

}  // namespace

const std::vector<FamilyCase>& registry() {
  static const std::vector<FamilyCase> cases = build_registry();
  return cases;
}

const FamilyCase& find_case(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown case: " + id);
}

std::vector<SampleResult> sample_and_verify(const FamilyCase& c, int samples, unsigned seed) {
  std::mt19937 rng(seed ^ fnv1a(c.id));
  const int n = c.params.empty() ? std::min(samples, 1) : samples;
  std::vector<SampleResult> out;
  for (int k = 0; k < n; ++k) {
    SampleResult r;
    r.family = c.id;
    r.params = draw_admissible(c, rng, false);
    const BivarPoly f = c.construct(r.params);
    r.curve = to_string(f);
    r.expected = c.expected.label;
    r.got = outcome(f);
    const auto& ok = c.expected.outcomes;
    r.pass = std::find(ok.begin(), ok.end(), r.got) != ok.end();
    if (c.expected.reducible) r.pass = r.pass && c.expected.reducible(r.params);
    if (r.pass && c.conjugate_pair) r.pass = has_conjugate_pair(f) == *c.conjugate_pair;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SampleResult> sample_complement(const FamilyCase& c, int samples, unsigned seed) {
  if (!c.violate) return {};
  std::mt19937 rng(~seed ^ fnv1a(c.id));
  std::vector<SampleResult> out;
  for (int k = 0; k < samples; ++k) {
    SampleResult r;
    r.family = c.id + "/complement";
    r.params = draw_admissible(c, rng, true);
    const BivarPoly f = c.construct(r.params);
    r.curve = to_string(f);
    r.expected = "not " + c.expected.label;
    r.got = outcome(f);
    r.pass = r.got != c.expected.label && lands_in_cascade(c, r.params, f, r.got);
    out.push_back(std::move(r));
  }
  return out;
}

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  p.add({0, 0, 0, 0, 0}, c);
  return p;
}

MPoly MPoly::var(Var v) {
  Exponents e{};
  e[v] = 1;
  MPoly p;
  p.add(e, Rational(1));
  return p;
}

void MPoly::add(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MPoly operator-(MPoly a, const MPoly& b) {
  for (const auto& [e, c] : b.terms_) a.add(e, -c);
  return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& s, const MPoly& p) { return MPoly::constant(s) * p; }

MPoly MPoly::substitute(Var v, const Rational& value) const {
  MPoly r;
  for (const auto& [exponents, c] : terms_) {
    Exponents e = exponents;
    Rational factor(1);
    for (int k = 0; k < e[v]; ++k) factor *= value;
    e[v] = 0;
    r.add(e, c * factor);
  }
  return r;
}

MPoly h_family() {
  const MPoly x = MPoly::var(MPoly::X), y = MPoly::var(MPoly::Y);
  const MPoly b = MPoly::var(MPoly::B), d = MPoly::var(MPoly::D), f = MPoly::var(MPoly::F);
  const MPoly s = y + x * x;
  return s * s + b * x * x * x * y + b * x * y * y +
         (Rational(1, 4) * b * b + d) * x * x * y * y + d * y * y * y + Rational(1, 2) * b * d * x * y * y * y +
         f * y * y * y * y;
}

bool h_identities_hold(const MPoly& h) {
  const MPoly x = MPoly::var(MPoly::X), y = MPoly::var(MPoly::Y);
  const MPoly b = MPoly::var(MPoly::B), d = MPoly::var(MPoly::D), f = MPoly::var(MPoly::F);
  const MPoly two = MPoly::constant(2);
  const MPoly u = two * x * x + b * x * y + two * y;
  const MPoly y2 = y * y;
  const MPoly quadratic_form = Rational(1, 4) * u * u + Rational(1, 2) * d * u * y2 + f * y2 * y2;
  const MPoly split = Rational(1, 4) * (two * x * x + two * y + b * x * y) *
                      (b * x * y + two * x * x + two * d * y2 + two * y);
  return (h - quadratic_form).is_zero() && (h - f * y2 * y2 - split).is_zero();
}

bool verify_H_identity() {
  const MPoly h = h_family();
  if (!h_identities_hold(h)) return false;
  // The sampled family at a = b, c = b^2/4 + d, e = bd/2 is the same polynomial.
  const FamilyCase& c = find_case("h-reducible");
  for (const auto& [bv, dv, fv] : {std::tuple{Rational(3, 2), Rational(-2), Rational(5, 7)},
                                   std::tuple{Rational(0), Rational(1), Rational(1, 4)}}) {
    Params p{{"b", bv}, {"d", dv}, {"f", fv}};
    c.derive(p);
    const MPoly hp = h.substitute(MPoly::B, bv).substitute(MPoly::D, dv).substitute(MPoly::F, fv);
    BivarPoly::Terms t;
    for (const auto& [e, coeff] : hp.terms()) t[{e[MPoly::X], e[MPoly::Y]}] = coeff;
    if (BivarPoly(t) != c.construct(p)) return false;
  }
  return true;
}

std::string params_to_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + " = " + to_string(v);
  return s;
}

std::string report_to_json(const std::vector<SampleResult>& results) {
  using J = nlohmann::ordered_json;
  J arr = J::array();
  for (const auto& r : results) {
    J params = J::object();
    for (const auto& [k, v] : r.params) params[k] = to_string(v);
    arr.push_back(J{{"family", r.family}, {"params", params}, {"curve", r.curve}, {"expected", r.expected},
                    {"got", r.got}, {"pass", r.pass}});
  }
  return arr.dump(2);
}

}  // namespace quartic
