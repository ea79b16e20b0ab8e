#ifndef FERMAT_MLD_VERIFICATION_HPP
#define FERMAT_MLD_VERIFICATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fermat_mld/counting.hpp"
#include "fermat_mld/mldegree.hpp"

namespace fermat_mld {

enum class CheckStatus {
  pass,
  fail,
  skip,  // enumeration budget exceeded
  info,  // observed, not asserted
};

struct CheckLine {
  std::string suite;
  std::string label;
  std::string lhs;
  std::string rhs;
  CheckStatus status;
};

std::string_view to_string(CheckStatus status);

/// "PASS Huh sign identity n=2 d=3: -9 == -9"
std::string render(const CheckLine& line);

bool all_passed(const std::vector<CheckLine>& lines);

struct VerificationConfig {
  EnumerationOptions options;
  /// Used by every check that consumes beta through the ML-degree formula.
  BetaSource beta = auto_beta_source();
};

std::vector<CheckLine> run_cyclotomic_suite();
std::vector<CheckLine> run_counting_suite(const VerificationConfig& config);
std::vector<CheckLine> run_mldegree_suite(const VerificationConfig& config);

}  // namespace fermat_mld

#endif  // FERMAT_MLD_VERIFICATION_HPP
