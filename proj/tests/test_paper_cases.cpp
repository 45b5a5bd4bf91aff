#include <set>

#include "doctest.h"
#include "json.hpp"
#include "quartic/paper_cases.hpp"
#include "quartic/parser.hpp"

using namespace quartic;

TEST_CASE("registry is well formed") {
  const auto& cases = registry();
  std::set<std::string> ids, names;
  for (const auto& c : cases) {
    CAPTURE(c.id);
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.expected.outcomes.empty());
    CHECK(c.guard);
    CHECK(c.condition);
    if (c.expected.label != "reducible") names.insert(c.expected.label);
    // A case with a complement says where the complement goes.
    CHECK(static_cast<bool>(c.violate) == !c.cascade.empty());
    for (const auto& id : c.cascade)
      if (id != "square") CHECK_NOTHROW(find_case(id));
  }
  // Every name of the quartic tables is reached by some case.
  for (const auto& e : quartic_name_table()) CHECK_MESSAGE(names.count(e.name), e.name);
  CHECK(find_case("a4").expected.label == "A4");
  CHECK_THROWS_AS(find_case("nope"), std::invalid_argument);
}

TEST_CASE("every case classifies as expected") {
  for (const auto& c : registry()) {
    for (const auto& r : sample_and_verify(c, 12, 0)) {
      CAPTURE(r.family);
      CAPTURE(r.curve);
      CAPTURE(r.got);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("complements never reproduce the expected name") {
  int controls = 0;
  for (const auto& c : registry()) {
    for (const auto& r : sample_complement(c, 6, 0)) {
      CAPTURE(r.family);
      CAPTURE(r.curve);
      CAPTURE(r.got);
      CHECK(r.pass);
      ++controls;
    }
  }
  CHECK(controls >= 60);
}

TEST_CASE("sampled parameters satisfy the case equalities") {
  for (const auto& r : sample_and_verify(find_case("a6"), 5, 3)) {
    const auto& p = r.params;
    CHECK(p.at("a") == p.at("b"));
    CHECK(p.at("c") == p.at("b") * p.at("b") / 4 + p.at("d"));
    CHECK(p.at("e") != p.at("b") * p.at("d") / 2);
    for (const auto& [k, v] : p) CHECK(v.get_den() <= 8 * 8 * 8);
  }
  for (const auto& r : sample_and_verify(find_case("e6"), 20, 1)) {
    CHECK(sgn(r.params.at("a")) != 0);
    for (const auto& [k, v] : r.params) {
      CHECK(v.get_den() <= 8);
      CHECK(abs(v.get_num()) <= 9);
    }
  }
}

TEST_CASE("sampling is deterministic") {
  const auto& c = find_case("conics-tangent-conjugate");
  CHECK(report_to_json(sample_and_verify(c, 5, 42)) == report_to_json(sample_and_verify(c, 5, 42)));
  CHECK(report_to_json(sample_and_verify(c, 5, 42)) != report_to_json(sample_and_verify(c, 5, 43)));
  const auto j = nlohmann::json::parse(report_to_json(sample_and_verify(c, 2, 0)));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["family"] == "conics-tangent-conjugate");
  CHECK(j[0]["expected"] == "A3*");
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["params"].contains("p"));
}

TEST_CASE("H identity") {
  CHECK(verify_H_identity());
  const MPoly h = h_family();
  CHECK(h_identities_hold(h));

  const MPoly x = MPoly::var(MPoly::X), y = MPoly::var(MPoly::Y);
  // Perturbing any one coefficient breaks both identities.
  CHECK_FALSE(h_identities_hold(h + MPoly::constant(Rational(1, 1000)) * x * y * y * y));
  CHECK_FALSE(h_identities_hold(h - x * x * y * y));
  CHECK_FALSE(h_identities_hold(h + MPoly::var(MPoly::B) * y * y * y));

  // b = d = f = 0 leaves (y + x^2)^2.
  const MPoly zero = h.substitute(MPoly::B, 0).substitute(MPoly::D, 0).substitute(MPoly::F, 0);
  CHECK(zero == (y + x * x) * (y + x * x));
}

TEST_CASE("H samples split into two conics or a double conic") {
  const auto& c = find_case("h-reducible");
  std::set<std::string> seen;
  for (const auto& r : sample_and_verify(c, 30, 5)) {
    CHECK(r.pass);
    seen.insert(r.got);
  }
  CHECK(seen.count("A7"));
  CHECK(seen.count("A7*"));
  // d^2 = 4 f makes H a perfect square.
  Params p{{"b", Rational(2)}, {"d", Rational(2)}, {"f", Rational(1)}};
  c.derive(p);
  CHECK(c.expected.reducible(p));
  CHECK_THROWS_AS(classify(c.construct(p)), MultipleComponentError);
}

TEST_CASE("degenerate cubic cases contain the line twice") {
  for (const char* id : {"node-tangent-line-degenerate", "smooth-cubic-degenerate"}) {
    for (const auto& r : sample_and_verify(find_case(id), 5, 2)) {
      CAPTURE(r.curve);
      CHECK(r.pass);
      CHECK_FALSE(is_squarefree(parse_poly(r.curve)));
    }
  }
}
