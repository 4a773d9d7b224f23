#include "projsymp/config.hpp"

#include <fstream>

#include "projsymp/error.hpp"

namespace projsymp {

using nlohmann::ordered_json;

ScenarioConfig ScenarioConfig::defaults() {
  ScenarioConfig cfg;
  Polynomial f = Curve::default_sextic();
  for (long i = 0; i <= 6; ++i) cfg.f_coefficients.push_back(f.coeff(i).str());
  return cfg;
}

ScenarioConfig ScenarioConfig::from_json(const ordered_json& j) {
  ScenarioConfig cfg = defaults();
  try {
    if (j.contains("curve")) {
      const auto& c = j.at("curve");
      if (c.contains("f")) {
        cfg.f_coefficients = c.at("f").get<std::vector<std::string>>();
      }
      if (c.contains("points")) {
        cfg.point_a = c.at("points").value("a", "inf+");
        cfg.point_b = c.at("points").value("b", "inf-");
      }
    }
    cfg.truncation = j.value("truncation", cfg.truncation);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("charvar")) {
      const auto& cv = j.at("charvar");
      cfg.charvar_genus = cv.value("genus", cfg.charvar_genus);
      cfg.charvar_seeds = cv.value("seeds", cfg.charvar_seeds);
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      cfg.tolerances.relator = t.value("relator", cfg.tolerances.relator);
      cfg.tolerances.svd_rank_low = t.value("svd_rel", cfg.tolerances.svd_rank_low);
      cfg.tolerances.irreducibility = t.value("irreducibility", cfg.tolerances.irreducibility);
      cfg.tolerances.pairing_rel = t.value("pairing_rel", cfg.tolerances.pairing_rel);
    }
  } catch (const ordered_json::exception& e) {
    fail(ErrorKind::ConfigError, std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig ScenarioConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ConfigError, "cannot open config file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::exception& e) {
    fail(ErrorKind::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

ordered_json ScenarioConfig::to_json() const {
  ordered_json j;
  j["curve"]["f"] = f_coefficients;
  j["curve"]["points"]["a"] = point_a;
  j["curve"]["points"]["b"] = point_b;
  j["truncation"] = truncation;
  j["seed"] = seed;
  j["charvar"]["genus"] = charvar_genus;
  j["charvar"]["seeds"] = charvar_seeds;
  j["tolerances"]["relator"] = tolerances.relator;
  j["tolerances"]["svd_rel"] = tolerances.svd_rank_low;
  j["tolerances"]["irreducibility"] = tolerances.irreducibility;
  j["tolerances"]["pairing_rel"] = tolerances.pairing_rel;
  return j;
}

CurvePtr ScenarioConfig::make_curve() const {
  validate();
  std::vector<Rational> coeffs;
  coeffs.reserve(f_coefficients.size());
  for (const auto& s : f_coefficients) coeffs.push_back(Rational::from_string(s));
  try {
    return Curve::make(Polynomial(std::move(coeffs)));
  } catch (const Error& e) {
    fail(ErrorKind::ConfigError, std::string("invalid curve: ") + e.what());
  }
}

void ScenarioConfig::validate() const {
  if (f_coefficients.size() != 7) {
    fail(ErrorKind::ConfigError, "curve.f needs exactly 7 ascending coefficients");
  }
  if (point_a != "inf+" || point_b != "inf-") {
    fail(ErrorKind::ConfigError, "marked points are fixed to a = inf+, b = inf-");
  }
  if (truncation < 4) fail(ErrorKind::ConfigError, "truncation must be >= 4");
  if (charvar_genus < 2) fail(ErrorKind::ConfigError, "charvar genus must be >= 2");
  if (charvar_seeds < 1) fail(ErrorKind::ConfigError, "charvar needs at least one seed");
}

}  // namespace projsymp
