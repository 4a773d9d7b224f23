// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "projsymp/report.hpp"
#include "projsymp/suites.hpp"

using namespace projsymp;
using nlohmann::ordered_json;

namespace {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

std::vector<CriterionResult> g_results;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool checks_pass(const std::vector<CheckRecord>& records, const std::vector<std::string>& names,
                 std::string* why) {
  std::map<std::string, const CheckRecord*> by_name;
  for (const auto& r : records) by_name[r.name] = &r;
  for (const auto& n : names) {
    auto it = by_name.find(n);
    if (it == by_name.end()) {
      *why = "missing check " + n;
      return false;
    }
    if (it->second->status != CheckStatus::Pass) {
      *why = n + " failed: " + it->second->witness.dump();
      return false;
    }
  }
  return true;
}

bool all_pass(const std::vector<CheckRecord>& records, std::string* why) {
  for (const auto& r : records) {
    if (r.status != CheckStatus::Pass) {
      *why = r.name + " failed: " + r.witness.dump();
      return false;
    }
  }
  return true;
}

void record(const std::string& name, bool pass, double secs, double budget,
            const std::string& detail) {
  CriterionResult res;
  res.name = name;
  res.pass = pass && secs < budget;
  res.seconds = secs;
  res.detail = detail;
  if (pass && secs >= budget) res.detail = "runtime budget exceeded";
  g_results.push_back(res);
  std::printf("[%s] %s (%.2fs, budget %.0fs)%s%s\n", res.pass ? "PASS" : "FAIL",
              name.c_str(), secs, budget, res.detail.empty() ? "" : " -- ",
              res.detail.c_str());
  std::fflush(stdout);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(PROJSYMP_BIN) + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  ordered_json j;
  in >> j;
  return j;
}

}  // namespace

int main() {
  Timer total;
  ScenarioConfig cfg = ScenarioConfig::defaults();  // N = 10, default sextic
  SuiteContext ctx(cfg);

  // 1. Jet suite: kernel exactly {d/dz, z d/dz, z^2 d/dz}; equivariance for
  //    100 seeded Mobius maps.
  {
    Timer t;
    auto records = run_jets_suite(ctx);
    std::string why;
    bool ok = checks_pass(records, {"jet_kernel_dimension", "mobius_equivariance"}, &why) &&
              all_pass(records, &why);
    record("criterion 1: jet suite", ok, t.seconds(), 10, why);
  }

  // 2. Lemma 1: kappa calibrated once, then H1 = H2 exactly on 500 pairs with
  //    q = 0 and 100 pairs with the curve connection.
  {
    Timer t;
    auto records = run_lemma1_suite(ctx);
    std::string why;
    bool ok = checks_pass(records,
                          {"kappa_calibration", "h1_equals_h2_line_q0",
                           "h1_equals_h2_curve_q_chart", "h1_equals_h2_function_field"},
                          &why) &&
              all_pass(records, &why);
    record("criterion 2: lemma 1 exact identity", ok, t.seconds(), 60, why);
  }

  // 3. Theorem 1: 200 seeded pairs per slot pair to exact zero.
  {
    Timer t;
    auto records = run_theorem1_suite(ctx);
    std::string why;
    bool ok = checks_pass(records,
                          {"coboundary_pairs_to_zero_slot1", "coboundary_pairs_to_zero_slot2"},
                          &why) &&
              all_pass(records, &why);
    record("criterion 3: theorem 1 vanishing", ok, t.seconds(), 120, why);
  }

  // 4. Hypercohomology dimensions 3/3/6 with exactness, stable N=10 vs 12.
  {
    Timer t;
    auto records = run_sequence_suite(ctx);
    std::string why;
    bool ok = checks_pass(records,
                          {"hypercohomology_dimensions", "alpha1_injective", "alpha2_surjective",
                           "exactness_at_middle", "truncation_stability_dimensions"},
                          &why) &&
              all_pass(records, &why);
    record("criterion 4: exact sequence dimensions", ok, t.seconds(), 120, why);
  }

  // 5 & 6 share the pairing suite run.
  std::vector<CheckRecord> pairing_records;
  {
    Timer t;
    pairing_records = run_pairing_suite(ctx);
    std::string why;
    bool ok = checks_pass(pairing_records,
                          {"descended_form_well_defined", "matrix_antisymmetric",
                           "matrix_rank_full", "vertical_subspace_isotropic",
                           "matrix_stable_across_truncations"},
                          &why);
    record("criterion 5: descended symplectic matrix", ok, t.seconds(), 120, why);
  }
  {
    // The checks ran inside the pairing suite; time an equivalent standalone
    // batch so the budget reflects the residue machinery alone.
    Timer t;
    std::string why;
    bool ok = checks_pass(pairing_records,
                          {"residue_theorem", "residue_parameter_independence"}, &why);
    Rng rng(4242);
    const CurvePtr& curve = ctx.geometry()->curve;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      std::vector<Rational> c0, c1;
      for (int i = 0; i <= 6; ++i) {
        c0.push_back(rng.small_rational_or_zero(6, 4));
        c1.push_back(rng.small_rational_or_zero(6, 4));
      }
      Section omega(1, RationalFunction(Polynomial(c0)), RationalFunction(Polynomial(c1)), curve);
      Rational sum = residue_at(omega, PointSpec::inf_plus()) +
                     residue_at(omega, PointSpec::inf_minus());
      if (!sum.is_zero()) {
        ok = false;
        why = "residue theorem violated in timing batch, trial " + std::to_string(trial);
      }
    }
    record("criterion 6: residue machinery", ok, t.seconds(), 30, why);
  }

  // 7. Character variety: dims 9/3/6 over 20 seeds, Goldman gates.
  {
    Timer t;
    auto records = run_goldman_suite(ctx);
    std::string why;
    bool ok = checks_pass(records,
                          {"dimensions_over_seeds", "goldman_vanishes_on_coboundaries",
                           "goldman_antisymmetric_nondegenerate"},
                          &why) &&
              all_pass(records, &why);
    record("criterion 7: character variety", ok, t.seconds(), 60, why);
  }

  // 8. Determinism: two CLI runs of `all` with the same seed agree modulo the
  //    meta block (timestamp and wall-clock timings).
  {
    Timer t;
    std::string out1 = "/tmp/projsymp_acceptance_run1.json";
    std::string out2 = "/tmp/projsymp_acceptance_run2.json";
    int rc1 = run_cli("all --seed 7 --out " + out1);
    int rc2 = run_cli("all --seed 7 --out " + out2);
    bool ok = rc1 == 0 && rc2 == 0;
    std::string why = ok ? "" : "cli exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2);
    if (ok) {
      ordered_json j1 = load_json_file(out1);
      ordered_json j2 = load_json_file(out2);
      j1.erase("meta");
      j2.erase("meta");
      ok = j1.dump() == j2.dump();
      if (!ok) why = "reports differ outside meta";
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    record("criterion 8: determinism", ok, t.seconds(), 450, why);
  }

  double total_s = total.seconds();
  bool all_ok = true;
  for (const auto& r : g_results) all_ok = all_ok && r.pass;
  if (total_s >= 600) {
    all_ok = false;
    std::printf("[FAIL] full-suite runtime %.1fs exceeds 600s\n", total_s);
  }
  std::printf("%s: %zu criteria, %.1fs total\n", all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_results.size(), total_s);
  return all_ok ? 0 : 1;
}
