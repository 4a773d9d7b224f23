#ifndef PROJSYMP_REPORT_HPP
#define PROJSYMP_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "projsymp/config.hpp"
#include "projsymp/connection.hpp"
#include "projsymp/laurent.hpp"
#include "projsymp/matrix.hpp"
#include "projsymp/section.hpp"

namespace projsymp {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// One verification record. On failure the witness carries enough data
/// (inputs, truncation, seed, trial index) to replay the check in isolation.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::ordered_json witness;
};

/// Machine-readable run report. Everything outside `meta` is deterministic
/// for a fixed config and seed; `meta` holds the timestamp and wall-clock
/// timings and is excluded from determinism comparisons.
struct Report {
  std::string tool = "projsymp";
  std::string version;
  std::string toolchain;
  ScenarioConfig config;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json meta;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

std::string toolchain_stamp();

// JSON encodings of the domain types (rationals as "p/q" strings).
nlohmann::ordered_json rational_to_json(const Rational& r);
nlohmann::ordered_json series_to_json(const LaurentSeries& s);
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
nlohmann::ordered_json rf_to_json(const RationalFunction& f);
nlohmann::ordered_json section_to_json(const Section& s);
nlohmann::ordered_json matrix_to_json(const RationalMatrix& m);
nlohmann::ordered_json complex_to_json(const std::complex<double>& z);
nlohmann::ordered_json connection_to_json(const ProjectiveConnection& conn);

// Representation files: complex entries as [re, im] pairs.
nlohmann::ordered_json representation_to_json(const charvar::Representation& rho);
charvar::Representation representation_from_json(const nlohmann::ordered_json& j);

}  // namespace projsymp

#endif
