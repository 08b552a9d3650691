#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pointfree/rational.hpp"

namespace pointfree::verify {

using json = nlohmann::ordered_json;

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t max_frame_size = 8;
  std::size_t samples_per_law = 200;
  std::vector<Rational> breakpoint_grid = default_grid();
  std::vector<std::string> suites = all_suites();

  static std::vector<Rational> default_grid();
  static std::vector<std::string> all_suites();

  /// Throws InvalidArgument on an empty or unsorted grid, zero samples or an unknown suite.
  void validate() const;
};

struct CheckResult {
  std::string id;
  /// Which law of the theory the check exercises, in words.
  std::string anchor;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// First failing instance; null when failures == 0.
  json counterexample;
  std::string note;

  bool passed() const { return failures == 0; }
};

struct Report {
  /// Sorted by id.
  std::vector<CheckResult> checks;

  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

using CheckFn = std::function<CheckResult(const SuiteConfig&)>;

struct CheckSpec {
  std::string id;
  std::string suite;
  CheckFn run;
};

/// Every registered check, in id order.
const std::vector<CheckSpec>& registry();

/// Runs the registered checks of the selected suites.
Report run(const SuiteConfig& config);

/// Runs one registered check by id. Throws InvalidArgument for an unknown id.
CheckResult run_check(const std::string& id, const SuiteConfig& config);

/// Grid C(X) = H_nf(X) against discreteness of X over every topology on at most
/// max_points points, with no separation hypothesis on X. Not part of run():
/// the statement is false for non-T1 spaces, and the counterexample is reported.
CheckResult check_discrete_iff_literal(const SuiteConfig& config, std::size_t max_points);

}  // namespace pointfree::verify
