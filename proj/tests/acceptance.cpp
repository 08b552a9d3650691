// One PASS/FAIL line per acceptance criterion, with the checks behind it.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pointfree/verify.hpp"

using namespace pointfree::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  SuiteConfig config;
  double time_limit_s = 0;  // 0: no limit
  bool literal_discrete = false;
};

SuiteConfig with(std::size_t max_size, std::size_t samples) {
  SuiteConfig c;
  c.max_frame_size = max_size;
  c.samples_per_law = samples;
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Riesz embedding into functions on the Booleanization", {"realfn.upsilon_riesz_embedding"}, with(10, 200), 60},
      {2, "density of the witnesses on Boolean frames, ingredients on all frames",
       {"universal.density", "universal.density_ingredients"}, with(8, 200)},
      {3, "Gamma/Delta isomorphism", {"intervalfn.gamma_delta"}, with(8, 200)},
      {4, "dual-path operations on nearly finite Hausdorff functions", {"intervalfn.dual_path"}, with(8, 200)},
      {5, "discrete suprema against brute-force least upper bounds", {"realfn.discrete_sup"}, with(6, 200), 120},
      {6, "trichotomy witnesses", {"intervalfn.trichotomy"}, with(8, 200)},
      {7, "Hausdorff iff maximal", {"intervalfn.hausdorff_iff_maximal"}, with(6, 200)},
      {8, "spatial suite",
       {"spatial.psi_roundtrip", "spatial.order_equivalences", "spatial.lower_endpoint_ops", "spatial.pi_roundtrip",
        "spatial.ed_p_iff"},
       with(8, 200), 0, true},
      {9, "coordinate model of Riesz spaces",
       {"rieszfd.band_scale", "rieszfd.m_embedding", "rieszfd.sandwich", "rieszfd.band_algebra", "rieszfd.bands"},
       with(8, 200), 60},
      {10, "structural checks", {"core.generate_valid", "core.booleanization", "core.cozero_oracle"}, with(8, 200)},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    for (const std::string& id : c.checks) results.push_back(run_check(id, c.config));
    if (c.literal_discrete) results.push_back(check_discrete_iff_literal(c.config, 4));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = c.time_limit_s == 0 || secs < c.time_limit_s;
    for (const CheckResult& r : results) ok = ok && r.passed();
    all = all && ok;
    std::printf("CRITERION %d %s: %s (%.1fs%s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                c.time_limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.time_limit_s)) + "s").c_str() : "");
    for (const CheckResult& r : results) {
      std::printf("  %s %s instances=%zu failures=%zu\n", r.passed() ? "ok  " : "FAIL", r.id.c_str(), r.instances, r.failures);
      if (!r.note.empty()) std::printf("       %s\n", r.note.c_str());
      if (!r.passed()) std::printf("       counterexample: %s\n", r.counterexample.dump().c_str());
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
