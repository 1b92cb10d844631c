#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spreadcert/settings.hpp"

using namespace spreadcert;

namespace {

Settings parse(const std::string& text, Settings base = {}) {
  std::istringstream in(text);
  return parse_settings(in, base);
}

}  // namespace

TEST_CASE("key = value lines override the defaults") {
  const Settings s = parse("# tighter sums\nterms = 2000\n\n  angle_grid=8192  \nbisection_tol = 1e-12\n");
  CHECK(s.terms == 2000);
  CHECK(s.angle_grid == 8192);
  CHECK(s.bisection_tol == 1e-12);
  CHECK(s.prescan_points == Settings{}.prescan_points);
}

TEST_CASE("parsing starts from the given base") {
  Settings base;
  base.terms = 900;
  CHECK(parse("root_tol = 1e-13\n", base).terms == 900);
  CHECK(parse("", base).terms == 900);
}

TEST_CASE("malformed config lines are rejected") {
  for (const char* bad : {"unknown_key = 3\n", "terms = many\n", "terms = 12x\n", "terms\n", "terms = -4\n",
                          "root_tol = 0\n", "angle_grid = 2.5\n"}) {
    CHECK_THROWS_AS(parse(bad), Error);
  }
}

TEST_CASE("config files load from disk") {
  const std::string path = "settings_test.conf";
  {
    std::ofstream out(path);
    out << "parameter_scan = 1024\n";
  }
  CHECK(load_settings_file(path).parameter_scan == 1024);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_settings_file("does/not/exist.conf"), Error);
}
