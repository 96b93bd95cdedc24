#include <doctest.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "pgf/sweep.hpp"

using namespace pgf;

namespace {

struct Output {
  int status;
  std::string out, err;
};

Output run_config(const SweepConfig& c, int threads = 1) {
  std::ostringstream o, e;
  const int st = run(c, o, e, threads);
  return {st, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string c; std::getline(in, c, ',');) v.push_back(c);
  return v;
}

bool has_diagnostic(const SweepConfig& c, const std::string& msg) {
  for (const auto& d : validate(c))
    if (d.message.find(msg) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("grids") {
  CHECK(parse_grid("0.5,1,2") == std::vector<double>{0.5, 1, 2});
  CHECK(parse_grid("linear:0:1:3") == std::vector<double>{0, 0.5, 1});
  const auto g = parse_grid("log:1:100:3");
  REQUIRE(g.size() == 3);
  CHECK(std::abs(g[1] - 10.0) < 1e-13);
  CHECK_THROWS_AS(parse_grid(""), Error);
  CHECK_THROWS_AS(parse_grid("linear:0:1:0"), Error);
  CHECK_THROWS_AS(parse_grid("log:0:1:3"), Error);
}

TEST_CASE("green table") {
  SweepConfig c;
  c.command = "green";
  c.beta = "1";
  c.r = "0.5,1,2";
  const auto o = run_config(c);
  CHECK(o.status == 0);
  const auto ls = lines(o.out);
  REQUIRE(ls.size() == 4);
  const auto head = split(ls[0]);
  const auto mid = split(ls[2]);
  const auto col = std::find(head.begin(), head.end(), "value_re") - head.begin();
  REQUIRE(col < long(mid.size()));
  CHECK(std::abs(std::stod(mid[col]) - std::exp(-1.0) / (4 * pi)) < 1e-16);
  CHECK(mid.back() == "ok");
}

TEST_CASE("poles table") {
  SweepConfig c;
  c.command = "poles";
  c.geometry = "spherical";
  c.radius = "100";
  c.perturbation = "low_dim_gamma";
  c.gamma_coeffs = {1.0};
  c.l_max = 2;
  const auto o = run_config(c);
  CHECK(o.status == 0);
  const auto ls = lines(o.out);
  const auto head = split(ls[0]);
  const long src = std::find(head.begin(), head.end(), "source") - head.begin();
  const long zre = std::find(head.begin(), head.end(), "z_re") - head.begin();
  int shifted = 0;
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto row = split(ls[i]);
    if (row[src] != "shifted") continue;
    const double want = (shifted + 1) * (shifted + 1) / 1e4;
    CHECK(std::abs(std::stod(row[zre]) - want) < 0.01 * want);
    ++shifted;
  }
  CHECK(shifted == 3);
}

TEST_CASE("configuration errors") {
  SweepConfig c;
  c.beta = "";
  c.z = "";
  auto o = run_config(c);
  CHECK(o.status == 2);
  CHECK(nlohmann::json::parse(lines(o.err).at(0))["error"] == "ConfigError");

  SweepConfig odd;
  odd.dim = 4;
  odd.beta = "1";
  odd.perturbation = "odd_gamma";
  odd.gamma_coeffs = {1.0};
  CHECK(has_diagnostic(odd, "perturbation mode incompatible with dimension"));

  SweepConfig deg;
  deg.dim = 5;
  deg.beta = "1";
  deg.perturbation = "odd_gamma";
  deg.gamma_coeffs = {1.0, 1.0, 1.0};
  CHECK(has_diagnostic(deg, "degree bound (d-3)/2 exceeded"));
  deg.gamma_coeffs = {1.0, 1.0};
  CHECK(validate(deg).empty());

  SweepConfig sph;
  sph.geometry = "spherical";
  sph.radius = "1";
  sph.beta = "1";
  sph.r = "0.5,3.5";
  CHECK(has_diagnostic(sph, "r > pi R"));
  for (const auto& d : validate(sph)) CHECK(!d.field.empty());
}

TEST_CASE("compute errors are tagged rows") {
  SweepConfig c;
  c.command = "green";
  c.perturbation = "low_dim_gamma";
  c.gamma_coeffs = {-1 / (4 * pi)};  // bound state at beta = 1
  c.beta = "0.5,1,2";
  const auto o = run_config(c);
  CHECK(o.status == 1);
  const auto ls = lines(o.out);
  REQUIRE(ls.size() == 4);
  CHECK(split(ls[2]).back() == "SelfEnergyZero");
  CHECK(split(ls[1]).back() == "ok");
  CHECK(nlohmann::json::parse(lines(o.err).at(0))["error"] == "SelfEnergyZero");
}

TEST_CASE("configuration files round trip") {
  SweepConfig c;
  c.command = "selfenergy";
  c.geometry = "hyperbolic";
  c.dim = 5;
  c.perturbation = "odd_gamma";
  c.gamma_coeffs = {0.25, -1.5};
  c.beta = "log:0.5:4:7";
  c.radius = "1,2.5";
  const auto text = to_config_string(c);

  SweepConfig back;
  CLI::App app;
  add_options(app, back);
  std::istringstream in(text);
  app.parse_from_stream(in);
  CHECK(to_config_string(back) == text);
  CHECK(run_config(back).out == run_config(c).out);
}

TEST_CASE("row order does not depend on threads") {
  SweepConfig c;
  c.command = "green";
  c.geometry = "spherical";
  c.dim = 3;
  c.radius = "1,2";
  c.beta = "linear:0.3:3:11";
  c.r = "linear:0.1:3:9";
  c.perturbation = "low_dim_gamma";
  c.gamma_coeffs = {0.3};
  const auto one = run_config(c, 1);
  CHECK(one.status == 0);
  CHECK(run_config(c, 4).out == one.out);
  c.format = "json";
  const auto j = run_config(c, 3);
  CHECK(nlohmann::json::parse(j.out).size() == 2 * 11 * 9);
  CHECK(run_config(c, 1).out == j.out);
}
