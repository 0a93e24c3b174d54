#pragma once

// Property suites run from the command line. Each property records how many
// cases it checked and the first counterexample, if any. Failures are
// reported, never thrown.

#include "randmin/params.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randmin {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int sigma = 2;
  int k = 2;
  int w = 2;
  /// Largest k+w for exhaustive suites.
  int max_total = 13;
  /// Longest string for the major-run uniqueness scan.
  int max_length = 16;
  /// Largest w for the delta polynomials and the monotonicity suite.
  int w_max = 10;
  /// Largest w for telescoping and the Prim cross-check.
  int w_cap = 60;
  std::uint64_t n = 100'000;
  int trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// lemma2, dev-independence, bijection, major-run, delta, monotonic.
const std::vector<std::string>& suite_names();

/// Throws InvalidParams for an unknown suite name or bad options.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace randmin
