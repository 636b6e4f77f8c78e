#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngpd/corpus.hpp"
#include "ngpd/io.hpp"
#include "ngpd/report.hpp"

namespace ngpd::commands {

struct Options {
  int dim_bound = 0;  // 0: command default
  std::uint64_t seed = 0;
  bool json = false;
  bool witness = false;
  int level = 0;    // 0: every level
  int object = -1;  // -1: one object per pi_0 class
  SizeClass size = SizeClass::small;
};

/// Input of the wrong kind or an option out of range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Report validate(const Document& d, const Options& o);
Report pi0(const Document& d, const Options& o);
Report pi1(const Document& d, const Options& o);
Report segal(const Document& d, const Options& o);
Report ngpd_validate(const Document& d, const Options& o);
Report ngpd_pi(const Document& d, const Options& o);
Report equiv(const Document& d, const Options& o);
Report unit_n1(const Document& d, const Options& o);
Report unit_n2(const Document& d, const Options& o);
Report f_decompose(const Document& d, const Options& o);

Document nerve(const Document& d, const Options& o);
Document diag(const Document& d, const Options& o);

std::string render(const Report& r, const Options& o);

/// 0 on PASS, 1 on FAIL or ERROR.
int status(const Report& r);

}  // namespace ngpd::commands
