#include <cstdlib>
#include <iostream>
#include <string>

#include "ngpd/suite.hpp"

// One pass/fail line per acceptance criterion on the seed-0 corpus; failing
// items are listed under their criterion.
int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  const ngpd::SuiteResult r = ngpd::run_acceptance(seed);
  for (const auto& c : r.criteria) {
    std::cout << "criterion " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << "  " << c.title;
    if (!c.summary.empty()) std::cout << " (" << c.summary << ")";
    std::cout << '\n';
    for (const auto& f : c.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (r.passed() && r.criteria.size() == 10 ? "all 10 criteria pass\n" : "FAILED\n");
  return r.passed() && r.criteria.size() == 10 ? 0 : 1;
}
