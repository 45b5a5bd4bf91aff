#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quartic/paper_cases.hpp"
#include "quartic/parser.hpp"

using namespace quartic;
using J = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failure = 1, not_singular = 2, multiple_component = 3 };

struct ClassifyOptions {
  std::string poly, file, point = "0,0", format = "ascii";
  bool find_singular = false;
  bool error_json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report_error(const ClassifyOptions& o, const std::string& kind, const std::string& message, int code) {
  if (o.error_json)
    std::cout << J{{"error", kind}, {"message", message}, {"exit_status", code}}.dump() << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return code;
}

int run_classify(const ClassifyOptions& o) {
  try {
    if (o.poly.empty() == o.file.empty()) throw std::invalid_argument("give exactly one of --poly, --file");
    const BivarPoly f = parse_poly(o.file.empty() ? o.poly : read_file(o.file));
    const DiagramFormat format = parse_format(o.format);
    if (!o.find_singular) {
      std::cout << record_to_text(classify(f, parse_point(o.point)), format);
      return ok;
    }
    const SingularPoints points = find_rational_singular_points(f);
    if (points.rational.empty())
      throw NotSingularError("no rational singular point (" + std::to_string(points.non_rational) +
                             " non-rational)");
    if (format == DiagramFormat::json) {
      J records = J::array();
      for (const auto& p : points.rational) records.push_back(J::parse(record_to_json(classify(f, p))));
      std::cout << J{{"points", records}, {"non_rational", points.non_rational}}.dump(2) << "\n";
    } else {
      for (const auto& p : points.rational) std::cout << record_to_text(classify(f, p), format) << "\n";
      std::cout << "non-rational singular points: " << points.non_rational << "\n";
    }
    return ok;
  } catch (const NotSingularError& e) {
    return report_error(o, "not-singular", e.what(), not_singular);
  } catch (const MultipleComponentError& e) {
    return report_error(o, "multiple-component", e.what(), multiple_component);
  } catch (const std::exception& e) {
    return report_error(o, "invalid-input", e.what(), failure);
  }
}

struct CasesOptions {
  int samples = 50;
  unsigned seed = 0;
  std::string which = "all";
};

std::string golden_got(const BivarPoly& f) {
  try {
    return classify(f).arnold_name.value_or("unnamed");
  } catch (const MultipleComponentError&) {
    return "multiple-component";
  }
}

int run_cases(const CasesOptions& o) {
  if (o.samples < 1) {
    std::cerr << "error: --samples must be at least 1\n";
    return failure;
  }
  const bool all = o.which == "all";
  std::vector<SampleResult> results;
  J out;
  out["schema"] = "quartic-paper-cases/v1";
  out["samples"] = o.samples;
  out["seed"] = o.seed;
  bool pass = true;

  if (all || (o.which != "h-identity" && o.which != "goldens")) {
    std::vector<const FamilyCase*> selected;
    if (all)
      for (const auto& c : registry()) selected.push_back(&c);
    else
      selected.push_back(&find_case(o.which));
    for (const auto* c : selected) {
      for (auto& r : sample_and_verify(*c, o.samples, o.seed)) results.push_back(std::move(r));
      for (auto& r : sample_complement(*c, o.samples, o.seed)) results.push_back(std::move(r));
    }
    out["cases"] = J::parse(report_to_json(results));
    for (const auto& r : results)
      if (!r.pass) {
        pass = false;
        std::cerr << "FAIL " << r.family << ": " << r.curve << " expected " << r.expected << ", got " << r.got
                  << "\n";
      }
  }
  if (all || o.which == "h-identity") {
    const bool h = verify_H_identity();
    out["h_identity"] = h;
    if (!h) std::cerr << "FAIL H identity\n";
    pass = pass && h;
  }
  if (all || o.which == "goldens") {
    J goldens = J::array();
    for (const auto& g : golden_examples()) {
      const std::string got = golden_got(parse_poly(g.curve));
      const bool row_pass = got == g.name;
      goldens.push_back(J{{"row", to_string(g.row.component) + " " + std::to_string(g.row.index)},
                          {"curve", g.curve},
                          {"expected", g.name},
                          {"got", got},
                          {"pass", row_pass}});
      if (!row_pass) std::cerr << "FAIL golden " << g.curve << ": expected " << g.name << ", got " << got << "\n";
      pass = pass && row_pass;
    }
    out["goldens"] = goldens;
  }
  out["pass"] = pass;
  std::cout << out.dump(2) << "\n";
  return pass ? ok : failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular points of real plane quartics: diagrams and names"};
  app.require_subcommand(1);

  ClassifyOptions co;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a singular point");
  auto* poly_opt = classify_cmd->add_option("--poly", co.poly, "Polynomial in x and y");
  classify_cmd->add_option("--file", co.file, "File holding one polynomial")->excludes(poly_opt);
  classify_cmd->add_option("--point", co.point, "Rational point x,y")->capture_default_str();
  classify_cmd->add_option("--format", co.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "ascii"}))
      ->capture_default_str();
  classify_cmd->add_flag("--find-singular", co.find_singular, "Classify every rational singular point");
  classify_cmd->add_flag("--error-json", co.error_json, "Print errors as JSON on stdout");

  CasesOptions po;
  auto* cases_cmd = app.add_subcommand("paper-cases", "Verify the case analysis by sampling");
  cases_cmd->add_option("--samples", po.samples, "Samples per regime")->capture_default_str();
  cases_cmd->add_option("--seed", po.seed, "Random seed")->capture_default_str();
  cases_cmd->add_option("--case", po.which, "Case id, all, h-identity or goldens")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : failure;
  }
  try {
    if (*classify_cmd) return run_classify(co);
    return run_cases(po);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
}
