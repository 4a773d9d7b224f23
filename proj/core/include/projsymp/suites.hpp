#ifndef PROJSYMP_SUITES_HPP
#define PROJSYMP_SUITES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projsymp/cech.hpp"
#include "projsymp/config.hpp"
#include "projsymp/report.hpp"

namespace projsymp {

/// Shared state for a run: the curve, the constructed connection and the
/// (lazily computed) hypercohomology model, so `all` builds them once.
class SuiteContext {
 public:
  explicit SuiteContext(ScenarioConfig cfg);

  const ScenarioConfig& config() const { return cfg_; }
  const CechGeometryPtr& geometry() const { return geom_; }
  const H1Basis& h1();  // may throw Error(UnstableTruncation)

 private:
  ScenarioConfig cfg_;
  CechGeometryPtr geom_;
  std::optional<H1Basis> h1_;
};

/// Suite names in canonical order: jets, lemma1, theorem1, sequence,
/// pairing, goldman.
const std::vector<std::string>& suite_names();

std::vector<CheckRecord> run_suite(const std::string& name, SuiteContext& ctx);

std::vector<CheckRecord> run_jets_suite(SuiteContext& ctx);
std::vector<CheckRecord> run_lemma1_suite(SuiteContext& ctx);
std::vector<CheckRecord> run_theorem1_suite(SuiteContext& ctx);
std::vector<CheckRecord> run_sequence_suite(SuiteContext& ctx);
std::vector<CheckRecord> run_pairing_suite(SuiteContext& ctx);
std::vector<CheckRecord> run_goldman_suite(SuiteContext& ctx);

}  // namespace projsymp

#endif
