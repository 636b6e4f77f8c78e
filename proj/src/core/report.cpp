#include "ngpd/report.hpp"

#include <sstream>

namespace ngpd {

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) {
    violations.push_back({v.rule, prefix.empty() ? v.where : prefix + ": " + v.where});
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::error: return "ERROR";
  }
  return "ERROR";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "error";
}

void Report::add(std::string id, bool ok, std::string witness) {
  if (!ok && witness.empty()) witness = id;
  checks.push_back({std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)});
}

void Report::add_error(std::string id, std::string message) {
  if (message.empty()) message = id;
  checks.push_back({std::move(id), CheckStatus::error, std::move(message)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back({prefix + c.id, c.status, c.witness});
  }
  for (const auto& n : other.not_checked) {
    bool seen = false;
    for (const auto& m : not_checked) seen = seen || m == n;
    if (!seen) not_checked.push_back(n);
  }
  for (const auto& n : other.notes) notes.push_back(n);
}

Verdict Report::verdict() const {
  bool failed = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::error) return Verdict::error;
    failed = failed || c.status == CheckStatus::fail;
  }
  return failed ? Verdict::fail : Verdict::pass;
}

std::string Report::to_text(bool witnesses) const {
  std::ostringstream os;
  os << "subject: " << subject << '\n';
  os << "verdict: " << to_string(verdict()) << '\n';
  for (const auto& c : checks) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (!c.witness.empty() && (witnesses || c.status != CheckStatus::pass)) {
      os << " -- " << c.witness;
    }
    os << '\n';
  }
  for (const auto& n : notes) os << "  note: " << n << '\n';
  for (const auto& n : not_checked) os << "  not checked: " << n << '\n';
  return os.str();
}

}  // namespace ngpd
