#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/fraction.hpp"
#include "qzeta/laurent.hpp"

namespace qzeta {

enum class CheckTag { Theorem, Conjectural };

struct CheckResult {
  std::string point;
  bool pass = false;
  std::string witness;  // first differing term on failure, empty on pass
};

struct SuiteReport {
  std::string suite;
  CheckTag tag = CheckTag::Theorem;
  std::vector<CheckResult> results;
  std::vector<std::string> skipped;  // points skipped by the resource guard
  double wall_seconds = 0;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Exit codes of the verify surface: 0 all pass, 1 theorem failure,
/// 2 conjecture falsified, 3 resource skips present.
enum class ExitStatus : int {
  AllPass = 0,
  TheoremFailure = 1,
  ConjectureFalsified = 2,
  ResourceSkip = 3,
};

ExitStatus combined_status(std::span<const SuiteReport> reports);

/// Parameter bounds for a suite run; negative values pick the suite's
/// published defaults.
struct Ranges {
  int m_max = -1;
  std::int64_t n_max = -1;
  std::int64_t order = -1;
  std::vector<int> primes = {2, 3};
  long long guard = 10'000'000;
  int workers = 1;  // parameter points are independent; reports are
                    // identical for every worker count
};

std::vector<std::string> suite_names();
CheckTag suite_tag(const std::string& name);
/// Operation names a suite exercises (coverage bookkeeping).
std::vector<std::string> suite_ops(const std::string& name);
SuiteReport run_suite(const std::string& name, const Ranges& ranges);

/// Exact fraction equality by cross-multiplication; on failure the witness
/// is the canonically first term of the cross-multiplied difference.
std::pair<bool, std::string> check_identity(const Fraction& lhs,
                                            const Fraction& rhs);

/// Coefficient-wise stabilization of a family of zeta fractions.  For each
/// n with n+1 present, expands both to t-series and compares coefficients
/// up to degree d(n).  Consecutive coefficients agree q^{-1}-adically, not
/// exactly: the check passes when every difference term has q-exponent
/// <= -(n+1), i.e. the prefix stabilizes below the q^{-n} layer.
std::vector<std::pair<std::int64_t, bool>> stabilization_check(
    const std::map<std::int64_t, Fraction>& series_at,
    const std::function<std::int64_t(std::int64_t)>& degree_rule);

}  // namespace qzeta
