#pragma once

// Invariant suites run by `sturmian verify`. Each suite is a list of named
// checks; a check fails with a serialized counterexample in `detail`. Reports
// contain no timings or addresses, so identical configurations give
// byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/serialize.hpp"

namespace sturmian {

struct VerifyConfig {
  QuadIrrational gamma = fibonacci_gamma();
  QuadIrrational psi;
  std::int64_t horizon = 200;
  std::size_t window = 2000;
  std::size_t l_max = 16;
  std::size_t n_max = 12;
  std::size_t equivalence_windows = 1000;
  std::size_t max_window_len = 500;
  std::size_t discrepancy_word_len = 6;
  std::int64_t discrepancy_max_len = 1000;
  std::size_t density_max_period = 10;
  std::int64_t exclusion_max_period = 12;
  std::uint64_t seed = 20240601;
  /// Replaces the profile computed from gamma (fixture testing).
  std::optional<DistanceProfile> profile_override;

  Json to_json() const;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// The check could not finish (budget, horizon, ambiguity) rather than
  /// finding a counterexample.
  bool limit_hit = false;
  Json detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  bool limit_hit() const;
  /// {suite, check, detail} of the first failing check, or null.
  Json first_failure() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();

/// `suite` is one of suite_names() or "all". Throws
/// ErrorKind::invalid_argument for anything else.
VerifyReport run_verify(const std::string& suite, const VerifyConfig& cfg);

SuiteResult verify_order(const VerifyConfig& cfg);
SuiteResult verify_discrepancy(const VerifyConfig& cfg);
SuiteResult verify_characterize(const VerifyConfig& cfg);
SuiteResult verify_energy(const VerifyConfig& cfg);

/// Balance/homogeneity agreement on random coding windows and on single-bit
/// mutations of them. Shared by the order suite and the acceptance tests.
struct EquivalenceStats {
  std::size_t windows = 0;
  std::size_t windows_undecidable = 0;  // fewer than two 1's
  std::size_t sturmian_failures = 0;
  std::size_t mutations = 0;
  std::size_t mutations_decided = 0;
  std::size_t mutations_unbalanced = 0;
  std::size_t disagreements = 0;
  Json first_counterexample;  // null when none
};

EquivalenceStats equivalence_trial(const QuadIrrational& gamma, std::size_t count, std::size_t max_len,
                                   std::uint64_t seed);

}  // namespace sturmian
