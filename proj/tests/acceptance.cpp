// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "numeric_oracle.hpp"
#include "quartic/paper_cases.hpp"
#include "quartic/parser.hpp"
#include "test_support.hpp"

using namespace quartic;

namespace {

constexpr double golden_seconds_limit = 5.0;
constexpr int regime_samples = 50;
constexpr unsigned regime_seed = 0;
constexpr int linear_changes_per_curve = 100;
constexpr double invariance_seconds_limit = 600.0;
constexpr unsigned invariance_seed = 2024;
const Rational oracle_x0 = Rational(1, 10000);
constexpr int fuzz_count = 10000;
constexpr unsigned fuzz_seed = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

/// Classification outcome as a string: the canonical key, or the error kind.
std::string outcome_key(const BivarPoly& f) {
  try {
    return classify(f).diagram_key;
  } catch (const MultipleComponentError&) {
    return "multiple-component";
  }
}

/// Jet with the zero placeholder terms dropped, e.g. "y = -x^2".
std::string printed_jet(const PuiseuxBranch& b) {
  PuiseuxBranch shown = b;
  shown.terms.clear();
  for (const auto& t : b.terms)
    if (!t.coeff.is_zero()) shown.terms.push_back(t);
  return shown.jet_string();
}

Verdict golden_table() {
  int matched = 0;
  double slowest = 0;
  std::ostringstream misses;
  for (const auto& g : golden_examples()) {
    const auto t0 = Clock::now();
    std::string got;
    try {
      got = classify(parse_poly(g.curve)).arnold_name.value_or("unnamed");
    } catch (const MultipleComponentError&) {
      got = "multiple-component";
    }
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    if (got == g.name && dt < golden_seconds_limit)
      ++matched;
    else
      misses << "; " << to_string(g.row.component) << " " << g.row.index << " expected " << g.name << " got " << got;
  }
  std::ostringstream d;
  d << matched << "/30 names match, slowest " << slowest << " s" << misses.str();
  return {matched == 30, d.str()};
}

Verdict worked_examples() {
  const auto cubic = parse_poly("x^2*y + x^4 + 2*x*y^2 + y^3");
  const auto branches = expand_to_separation(cubic);
  std::multiset<std::string> jets;
  for (const auto& b : branches) jets.insert(printed_jet(b));
  const std::multiset<std::string> expected{"y = -x + x^(3/2)", "y = -x - x^(3/2)", "y = -x^2"};
  const auto d = canonicalize(build_diagram(branches, conjugate_pairs(branches)));
  const bool cubic_ok = jets == expected && d.columns.size() == 2 && d.columns[0].exponent == 1 &&
                        d.columns[1].exponent == Rational(3, 2) && d.columns[1].vertices.size() == 3;

  const auto cusp = classify(parse_poly("y^2 + x^3"));
  const bool cusp_ok = cusp.diagram.columns.size() == 1 && cusp.diagram.columns[0].exponent == Rational(3, 2) &&
                       cusp.diagram.columns[0].vertices.size() == 2 && cusp.diagram.braces.empty();
  std::ostringstream s;
  s << "cubic jets {";
  for (const auto& j : jets) s << j << (j == *jets.rbegin() ? "" : ", ");
  s << "} columns " << d.columns.size() << ", cusp braces " << cusp.diagram.braces.size();
  return {cubic_ok && cusp_ok, s.str()};
}

Verdict condition_suite() {
  int total = 0, passed = 0, regimes = 0;
  std::string first_failure;
  for (const auto& c : registry()) {
    ++regimes;
    auto results = sample_and_verify(c, regime_samples, regime_seed);
    const auto complement = sample_complement(c, regime_samples, regime_seed);
    results.insert(results.end(), complement.begin(), complement.end());
    for (const auto& r : results) {
      ++total;
      if (r.pass)
        ++passed;
      else if (first_failure.empty())
        first_failure = "; first failure " + r.family + ": " + r.curve + " got " + r.got;
    }
  }
  std::ostringstream d;
  d << passed << "/" << total << " samples over " << regimes << " cases, seed " << regime_seed << first_failure;
  return {passed == total, d.str()};
}

Verdict h_identity() {
  const bool ok = verify_H_identity();
  return {ok, ok ? "both identities hold over Q[x, y, b, d, f]" : "identity fails"};
}

Verdict invariance() {
  std::mt19937 rng(invariance_seed);
  const auto t0 = Clock::now();
  int total = 0, same = 0;
  std::string first_failure;
  for (const auto& g : golden_examples()) {
    const auto f = parse_poly(g.curve);
    const std::string base = outcome_key(f);
    for (int k = 0; k < linear_changes_per_curve; ++k) {
      const auto m = support::random_linear_change(rng, f);
      const std::string got = outcome_key(m.apply(f));
      ++total;
      if (got == base)
        ++same;
      else if (first_failure.empty())
        first_failure = "; first failure " + g.curve + ": " + base + " became " + got;
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << same << "/" << total << " identical, " << dt << " s" << first_failure;
  return {same == total && total == 30 * linear_changes_per_curve && dt < invariance_seconds_limit, d.str()};
}

Verdict numeric_oracle() {
  int curves = 0, branches = 0, checks = 0, ok = 0;
  std::string first_failure;
  for (const auto& g : golden_examples()) {
    BivarPoly f = parse_poly(g.curve);
    if (!is_squarefree(f)) {
      // The only such row is a doubled conic; its points are those of the conic.
      const BivarPoly conic = parse_poly("y + x^2 + 1/2*y^2");
      if (conic * conic != f) return {false, "unexpected non-square-free golden " + g.curve};
      f = conic;
    }
    const BivarPoly h = rotate_away_vertical(f).curve;
    const auto br = expand_to_separation(h);
    ++curves;
    for (const Rational& x0 : {oracle_x0, Rational(-oracle_x0)}) {
      const auto rep = oracle::check(h, br, x0);
      ++checks;
      branches += rep.real_branches;
      if (rep.ok)
        ++ok;
      else if (first_failure.empty())
        first_failure = "; first failure " + g.curve + " at x0 = " + to_string(x0) + ": " + rep.detail;
    }
  }
  std::ostringstream d;
  d << ok << "/" << checks << " sides matched one-to-one, " << branches << " real branch values over " << curves
    << " curves" << first_failure;
  return {ok == checks, d.str()};
}

Verdict fuzz() {
  std::mt19937 rng(fuzz_seed);
  int named = 0, rejected = 0, outside = 0;
  std::string first_outside;
  for (int k = 0; k < fuzz_count; ++k) {
    BivarPoly f;
    while (f.is_zero()) f = support::random_singular_quartic(rng);
    try {
      const auto rec = classify(f);
      if (rec.arnold_name) {
        ++named;
      } else {
        ++outside;
        if (first_outside.empty()) first_outside = "; first outside " + to_string(f) + " key " + rec.diagram_key;
      }
    } catch (const MultipleComponentError&) {
      ++rejected;
    }
  }
  std::ostringstream d;
  d << named << " named, " << rejected << " rejected as multiple components, " << outside << " outside the table"
    << first_outside;
  return {outside == 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"golden table reproduction", golden_table},
      {"worked examples", worked_examples},
      {"condition suite", condition_suite},
      {"H identity", h_identity},
      {"linear change invariance", invariance},
      {"numeric oracle", numeric_oracle},
      {"fuzz completeness", fuzz},
  };
  bool all = true;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << n << " " << c.title << ": " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
