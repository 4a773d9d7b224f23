#include "projsymp/report.hpp"

#include <sstream>

#include "projsymp/error.hpp"

namespace projsymp {

using nlohmann::ordered_json;

bool Report::all_passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["tool"] = tool;
  j["version"] = version;
  j["toolchain"] = toolchain;
  j["config"] = config.to_json();
  j["checks"] = ordered_json::array();
  int pass = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    ordered_json rec;
    rec["name"] = c.name;
    rec["status"] = check_status_name(c.status);
    if (!c.witness.is_null()) rec["witness"] = c.witness;
    j["checks"].push_back(rec);
    switch (c.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::Skipped: ++skipped; break;
    }
  }
  j["summary"] = {{"pass", pass}, {"fail", failed}, {"skipped", skipped}};
  j["meta"] = meta;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  int pass = 0, failed = 0;
  for (const auto& c : checks) {
    os << "[" << check_status_name(c.status) << "] " << c.name;
    if (c.status == CheckStatus::Fail && !c.witness.is_null()) {
      os << "  witness: " << c.witness.dump();
    }
    os << "\n";
    if (c.status == CheckStatus::Pass) ++pass;
    if (c.status == CheckStatus::Fail) ++failed;
  }
  os << (failed == 0 ? "OK" : "FAILED") << " (" << pass << " passed, " << failed << " failed, "
     << (checks.size() - static_cast<size_t>(pass) - static_cast<size_t>(failed)) << " skipped)\n";
  return os.str();
}

std::string toolchain_stamp() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  os << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
  os << "unknown-compiler";
#endif
  os << ", c++" << (__cplusplus / 100 % 100);
  return os.str();
}

ordered_json rational_to_json(const Rational& r) { return r.str(); }

ordered_json series_to_json(const LaurentSeries& s) {
  ordered_json j;
  j["valuation"] = s.valuation();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  if (s.is_exact()) {
    j["precision"] = "exact";
  } else {
    j["precision"] = s.precision();
  }
  return j;
}

ordered_json polynomial_to_json(const Polynomial& p) {
  ordered_json j = ordered_json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  return j;
}

ordered_json rf_to_json(const RationalFunction& f) {
  ordered_json j;
  j["num"] = polynomial_to_json(f.num());
  j["den"] = polynomial_to_json(f.den());
  return j;
}

ordered_json section_to_json(const Section& s) {
  ordered_json j;
  j["k"] = s.weight();
  j["r0"] = rf_to_json(s.r0());
  j["r1"] = rf_to_json(s.r1());
  return j;
}

ordered_json matrix_to_json(const RationalMatrix& m) {
  ordered_json j = ordered_json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j.push_back(row);
  }
  return j;
}

ordered_json complex_to_json(const std::complex<double>& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json connection_to_json(const ProjectiveConnection& conn) {
  ordered_json j;
  j["q"] = rf_to_json(conn.q());
  if (conn.on_curve()) {
    j["curve"]["f"] = polynomial_to_json(conn.curve()->f());
  } else {
    j["curve"] = "P1";
  }
  ordered_json params = ordered_json::array();
  for (const auto& c : conn.family_params()) params.push_back(c.str());
  j["family_params"] = params;
  return j;
}

ordered_json representation_to_json(const charvar::Representation& rho) {
  ordered_json j;
  j["genus"] = rho.pres.genus;
  ordered_json gens = ordered_json::array();
  for (const auto& g : rho.gen) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < 2; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 2; ++c) row.push_back(complex_to_json(g(r, c)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  return j;
}

charvar::Representation representation_from_json(const ordered_json& j) {
  try {
    charvar::Representation rho(j.at("genus").get<int>());
    for (const auto& gj : j.at("generators")) {
      charvar::Mat2 g;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          const auto& e = gj.at(r).at(c);
          g(r, c) = charvar::Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
      }
      rho.gen.push_back(g);
    }
    if (rho.gen.size() != static_cast<size_t>(rho.pres.generator_count())) {
      fail(ErrorKind::ConfigError, "representation file has the wrong generator count");
    }
    return rho;
  } catch (const ordered_json::exception& e) {
    fail(ErrorKind::ConfigError, std::string("malformed representation file: ") + e.what());
  }
}

}  // namespace projsymp
