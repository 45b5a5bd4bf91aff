#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QUARTIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("classify prints the name") {
  const auto r = run("classify --poly 'y^3 - x^4'");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "name: E6"));
  CHECK(contains(r.out, "0     4/3"));
}

TEST_CASE("classify translates to the given point") {
  const auto r = run("classify --poly 'y^2 - (x - 1)^3' --point 1,0 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["arnold_name"] == "A2");
  CHECK(j["point"][0] == "1");
}

TEST_CASE("classify reads a file") {
  const std::string path = "cli_test_input.txt";
  std::ofstream(path) << "(x^2 + y^2)*(x^2 + 4*y^2)\n";
  const auto r = run("classify --file " + path + " --format dot");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "digraph"));
  CHECK(contains(r.out, "X9**"));
  std::remove(path.c_str());
}

TEST_CASE("exit statuses") {
  CHECK(run("classify --poly 'y - x^2'").status == 2);
  CHECK(run("classify --poly 'y^2 - x^3' --point 1,1").status == 2);
  CHECK(run("classify --poly '(y - x^2)^2'").status == 3);
  CHECK(run("classify --poly 'y^2 - x^'").status == 1);
  CHECK(run("classify --poly 'y^2' --format svg").status == 1);
  CHECK(run("classify").status == 1);
  CHECK(run("").status == 1);

  const auto e = run("classify --poly 'y - x^2' --error-json");
  CHECK(e.status == 2);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["error"] == "not-singular");
  CHECK(j["exit_status"] == 2);
}

TEST_CASE("find singular points") {
  const auto r = run("classify --poly '(y - 1)*(y - 2)*(x^2 + y^2)' --find-singular --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["points"].size() == 1);
  CHECK(j["points"][0]["arnold_name"] == "A1*");
  CHECK(j["non_rational"] == 4);
  CHECK(run("classify --poly 'x^2 + y^2 - 1' --find-singular").status == 2);
}

TEST_CASE("paper cases") {
  const auto h = run("paper-cases --case h-identity");
  CHECK(h.status == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j["h_identity"] == true);
  CHECK_FALSE(j.contains("cases"));

  const auto a = run("paper-cases --samples 1 --seed 7 --case a5-star");
  CHECK(a.status == 0);
  CHECK(a.out == run("paper-cases --samples 1 --seed 7 --case a5-star").out);
  const auto k = nlohmann::json::parse(a.out);
  CHECK(k["cases"][0]["got"] == "A5*");

  CHECK(run("paper-cases --case nope").status == 1);
  CHECK(run("paper-cases --samples 0").status == 1);
}
