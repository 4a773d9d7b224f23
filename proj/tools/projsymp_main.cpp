// projsymp: verification driver for the residue-pairing symplectic form on
// deformations of a projective structure, plus the independent Goldman-form
// suite on the character variety.
//
// Exit codes: 0 all selected checks pass, 1 a check failed, 2 config error,
// 3 unstable truncation (raise N).

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "projsymp/error.hpp"
#include "projsymp/report.hpp"
#include "projsymp/suites.hpp"

namespace {

using projsymp::CheckRecord;
using projsymp::CheckStatus;
using projsymp::Error;
using projsymp::ErrorKind;
using projsymp::Report;
using projsymp::ScenarioConfig;
using projsymp::SuiteContext;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ConfigError: return 2;
    case ErrorKind::UnstableTruncation: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the residue pairing on deformations of "
               "projective structures, with a Goldman-form cross-suite"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  long long seed_override = -1;
  long truncation_override = -1;
  bool as_json = false;
  bool as_text = false;
  app.add_option("--config", config_path, "scenario config JSON");
  app.add_option("--out", out_path, "write the JSON report here");
  app.add_option("--seed", seed_override, "override the scenario seed");
  app.add_option("--truncation", truncation_override, "override the truncation N");
  app.add_flag("--json", as_json, "print the JSON report to stdout");
  app.add_flag("--text", as_text, "print the human-readable summary (default)");

  std::vector<std::string> selected;
  for (const auto& name : projsymp::suite_names()) {
    app.add_subcommand(name, "run the " + name + " suite")->fallthrough();
  }
  app.add_subcommand("all", "run every suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ScenarioConfig cfg;
    if (!config_path.empty()) {
      cfg = ScenarioConfig::load_file(config_path);
    } else {
      cfg = ScenarioConfig::defaults();
    }
    if (seed_override >= 0) cfg.seed = static_cast<uint64_t>(seed_override);
    if (truncation_override >= 0) cfg.truncation = truncation_override;
    cfg.validate();

    for (const auto* sub : app.get_subcommands()) {
      if (sub->get_name() == "all") {
        selected = projsymp::suite_names();
      } else {
        selected.push_back(sub->get_name());
      }
    }

    SuiteContext ctx(cfg);
    Report report;
    report.version = "0.1.0";
    report.toolchain = projsymp::toolchain_stamp();
    report.config = cfg;

    nlohmann::ordered_json timings;
    for (const auto& name : selected) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<CheckRecord> records = projsymp::run_suite(name, ctx);
      auto t1 = std::chrono::steady_clock::now();
      timings[name] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      for (auto& rec : records) {
        rec.name = name + "." + rec.name;
        report.checks.push_back(std::move(rec));
      }
    }
    report.meta["timestamp"] = iso_timestamp();
    report.meta["timings_ms"] = timings;

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write report to " << out_path << "\n";
        return 2;
      }
      out << report.to_json().dump(2) << "\n";
    }
    if (as_json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.all_passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::UnstableTruncation) {
      std::cerr << "hint: re-run with a larger --truncation\n";
    }
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
