#ifndef PROJSYMP_CONFIG_HPP
#define PROJSYMP_CONFIG_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "projsymp/charvar.hpp"
#include "projsymp/curve.hpp"

namespace projsymp {

/// Scenario for the verification suites: the curve, the marked points (fixed
/// to the two infinity points), the truncation level, seeds and the
/// floating-point tolerances (ignored by the exact suites).
struct ScenarioConfig {
  std::vector<std::string> f_coefficients;  // ascending, 7 entries, monic
  std::string point_a = "inf+";
  std::string point_b = "inf-";
  long truncation = 10;
  uint64_t seed = 7;
  int charvar_genus = 2;
  int charvar_seeds = 20;
  charvar::Tolerances tolerances;

  static ScenarioConfig defaults();
  static ScenarioConfig from_json(const nlohmann::ordered_json& j);
  static ScenarioConfig load_file(const std::string& path);

  nlohmann::ordered_json to_json() const;

  /// Builds and validates the curve; throws Error(ConfigError) on bad input.
  CurvePtr make_curve() const;
  void validate() const;
};

}  // namespace projsymp

#endif
