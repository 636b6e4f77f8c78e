#pragma once

#include <string>
#include <vector>

namespace ngpd {

/// A single violated rule, with the cell (or table entry) that witnesses it.
struct Violation {
  std::string rule;
  std::string where;
  bool operator==(const Violation&) const = default;
};

/// Report-valued validation result. Empty iff the object satisfies every
/// checked invariant.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string where) {
    violations.push_back({std::move(rule), std::move(where)});
  }
  void append(const ValidationReport& other, const std::string& prefix = {});
};

enum class Verdict { pass, fail, error };
enum class CheckStatus { pass, fail, error };

const char* to_string(Verdict v);
const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  bool operator==(const Check&) const = default;
};

/// Result of a verification command: an ordered list of checks plus the
/// explicit list of things that were deliberately not verified.
struct Report {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> not_checked;
  std::vector<std::string> notes;

  /// Records a check. A failing check always carries a witness; an empty one
  /// is replaced by the check id so the invariant holds.
  void add(std::string id, bool ok, std::string witness = {});
  void add_error(std::string id, std::string message);
  void merge(const Report& other, const std::string& prefix);

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::pass; }

  /// Deterministic plain-text rendering. Witnesses of passing checks are only
  /// printed when `witnesses` is set.
  std::string to_text(bool witnesses = false) const;

  bool operator==(const Report&) const = default;
};

}  // namespace ngpd
