#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngpd/corpus.hpp"

namespace ngpd {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> failures;  // one line per failing item
  std::vector<std::string> not_checked;
};

struct SuiteResult {
  std::uint64_t seed = 0;
  SizeClass size = SizeClass::small;
  std::vector<CriterionResult> criteria;

  bool passed() const;
  /// Deterministic rendering: one "[PASS]"/"[FAIL]" line per criterion, then
  /// indented failures and exclusions.
  std::string to_text() const;
  std::string to_json() const;
};

/// Criteria 1-9 on the corpus of the given seed.
SuiteResult run_suite(std::uint64_t seed, SizeClass size = SizeClass::small);
/// run_suite twice plus criterion 10: both renderings are byte-identical.
SuiteResult run_acceptance(std::uint64_t seed, SizeClass size = SizeClass::small);

}  // namespace ngpd
