#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/classifier.hpp"

namespace quartic {

using Params = std::map<std::string, Rational>;

/// Expected classification of every admissible sample.
struct Expectation {
  /// Printed expectation: an Arnol'd name, "reducible" or "multiple-component".
  std::string label;
  /// Diagram type label in the case analysis, e.g. "reducible Type 10".
  std::string type_label;
  /// Classifier outcomes accepted: names, or "multiple-component".
  std::vector<std::string> outcomes;
  /// Exact check that the sample splits off a further component; set for
  /// the cases closed by reducibility.
  std::function<bool(const Params&)> reducible;
};

struct FamilyCase {
  std::string id;
  /// Curve as printed, parameters as letters.
  std::string family;
  /// Free parameters; derived ones are added by derive.
  std::vector<std::string> params;
  std::function<BivarPoly(const Params&)> construct;
  /// Fills parameters fixed by the case equalities, e.g. a = b.
  std::function<void(Params&)> derive;
  /// Nondegeneracy guards such as a != 0, enforced by the sampler.
  std::string guard_text;
  std::function<bool(const Params&)> guard;
  /// The case condition; samples are drawn where it holds.
  std::string condition_text;
  std::function<bool(const Params&)> condition;
  Expectation expected;
  /// Moves a sample onto the complement of the condition, for negative
  /// controls; absent for unconditional cases.
  std::function<void(Params&)> violate;
  /// The branch pair at the last column is a conjugate pair exactly in
  /// the starred regimes; checked per sample when set.
  std::optional<bool> conjugate_pair;
  /// Cases the complement falls into; "square" stands for a sample that
  /// is not square-free.
  std::vector<std::string> cascade;
};

/// Every case of the quartic case analysis, in order.
const std::vector<FamilyCase>& registry();

const FamilyCase& find_case(const std::string& id);

struct SampleResult {
  std::string family;
  Params params;
  std::string curve;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Draws admissible parameters (numerators in [-9, 9], denominators <= 8)
/// with a seeded generator, classifies each sample and compares.
std::vector<SampleResult> sample_and_verify(const FamilyCase& c, int samples, unsigned seed);

/// Complement of the condition: no sample may reproduce the expected name,
/// and each must land in one of the cascade cases.
std::vector<SampleResult> sample_complement(const FamilyCase& c, int samples, unsigned seed);

/// Polynomial in x, y, b, d, f with rational coefficients.
class MPoly {
 public:
  using Exponents = std::array<int, 5>;
  enum Var { X, Y, B, D, F };

  MPoly() = default;
  static MPoly constant(const Rational& c);
  static MPoly var(Var v);

  MPoly& operator+=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& s, const MPoly& p);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  MPoly substitute(Var v, const Rational& value) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

 private:
  void add(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

/// (y + x^2)^2 + b x^3 y + b x y^2 + (b^2/4 + d) x^2 y^2 + d y^3 + (bd/2) x y^3 + f y^4.
MPoly h_family();

/// Both identities for a given H: the quadratic form in 2x^2 + bxy + 2y and
/// y^2, and the factorization of H - f y^4.
bool h_identities_hold(const MPoly& h);

bool verify_H_identity();

std::string params_to_string(const Params& p);
std::string report_to_json(const std::vector<SampleResult>& results);

}  // namespace quartic
