#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "projsymp/config.hpp"
#include "projsymp/error.hpp"
#include "projsymp/report.hpp"
#include "projsymp/suites.hpp"

using namespace projsymp;
using nlohmann::ordered_json;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/projsymp_test_") + name;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(PROJSYMP_BIN) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  ordered_json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("config defaults, parsing and validation") {
  ScenarioConfig cfg = ScenarioConfig::defaults();
  cfg.validate();
  CHECK(cfg.truncation == 10);
  CHECK(cfg.make_curve()->rational_roots().size() == 6);

  ordered_json j = cfg.to_json();
  ScenarioConfig round = ScenarioConfig::from_json(j);
  CHECK(round.to_json() == j);

  ordered_json bad = j;
  bad["truncation"] = 2;
  CHECK_THROWS_AS(ScenarioConfig::from_json(bad), Error);
  ordered_json bad2 = j;
  bad2["curve"]["points"]["a"] = "branch(0)";
  CHECK_THROWS_AS(ScenarioConfig::from_json(bad2), Error);
  ordered_json bad3 = j;
  bad3["curve"]["f"] = {"1", "2"};
  CHECK_THROWS_AS(ScenarioConfig::from_json(bad3), Error);
}

TEST_CASE("serialization of domain values") {
  CHECK(rational_to_json(Rational(-7, 2)) == "-7/2");
  LaurentSeries s(-1, {Rational(2), Rational(0), Rational(5)}, 4);
  ordered_json js = series_to_json(s);
  CHECK(js["valuation"] == -1);
  CHECK(js["precision"] == 4);
  CHECK(js["coefficients"][0] == "2");
  auto curve = Curve::make(Curve::default_sextic());
  Section sec(2, RationalFunction(Polynomial({Rational(1), Rational(2)})),
              RationalFunction(), curve);
  ordered_json jsec = section_to_json(sec);
  CHECK(jsec["k"] == 2);
  CHECK(jsec["r0"]["num"][1] == "2");
  // connection file format
  auto conn = build_connection(curve);
  ordered_json jc = connection_to_json(conn);
  CHECK(jc.contains("q"));
  CHECK(jc["family_params"].size() == 6);
  CHECK(jc["curve"]["f"].size() == 7);
}

TEST_CASE("representation files round-trip through text") {
  namespace cv = projsymp::charvar;
  cv::Representation rho = cv::random_representation(2, 9);
  ordered_json file = representation_to_json(rho);
  CHECK(file["generators"].size() == 4);
  CHECK(file["generators"][0][0][0].size() == 2);  // [re, im]
  cv::Representation back = representation_from_json(ordered_json::parse(file.dump()));
  for (size_t i = 0; i < rho.gen.size(); ++i) {
    CHECK((rho.gen[i] - back.gen[i]).norm() == 0.0);
  }
  ordered_json bad = file;
  bad["generators"].erase(3);
  CHECK_THROWS_AS(representation_from_json(bad), Error);
}

TEST_CASE("jets suite passes on the default scenario") {
  ScenarioConfig cfg = ScenarioConfig::defaults();
  cfg.truncation = 6;  // keep the shared context light
  SuiteContext ctx(cfg);
  auto records = run_jets_suite(ctx);
  for (const auto& rec : records) {
    INFO(rec.name, ": ", rec.witness.dump());
    CHECK(rec.status == CheckStatus::Pass);
  }
}

TEST_CASE("cli: config error exits with code 2") {
  std::string bad = temp_path("bad_config.json");
  {
    std::ofstream out(bad);
    out << "{\"truncation\": 1}";
  }
  CHECK(run_cli("jets --config " + bad) == 2);
  CHECK(run_cli("jets --config /nonexistent/path.json") == 2);
  std::remove(bad.c_str());
}

TEST_CASE("cli: jets subcommand runs clean and writes a report") {
  std::string out = temp_path("jets_report.json");
  CHECK(run_cli("jets --out " + out) == 0);
  ordered_json j = load_json(out);
  CHECK(j["tool"] == "projsymp");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].size() > 0);
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
  }
  CHECK(j["meta"].contains("timestamp"));
  std::remove(out.c_str());
}

TEST_CASE("report text format lists one line per check") {
  Report rep;
  rep.version = "0.1.0";
  rep.toolchain = toolchain_stamp();
  rep.config = ScenarioConfig::defaults();
  rep.checks.push_back({"demo.ok", CheckStatus::Pass, {}});
  rep.checks.push_back({"demo.bad", CheckStatus::Fail, ordered_json{{"value", "1/2"}}});
  std::string text = rep.to_text();
  CHECK(text.find("[pass] demo.ok") != std::string::npos);
  CHECK(text.find("[fail] demo.bad") != std::string::npos);
  CHECK(text.find("FAILED") != std::string::npos);
  CHECK(!rep.all_passed());
}
