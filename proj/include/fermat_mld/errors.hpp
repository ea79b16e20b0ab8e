#ifndef FERMAT_MLD_ERRORS_HPP
#define FERMAT_MLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermat_mld {

/// Base class for every error raised by the library. Precondition
/// violations on plain arguments (e.g. nu = 0) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonzeroRemainder : public Error {
 public:
  NonzeroRemainder() : Error("polynomial division leaves a nonzero remainder") {}
};

class NonMonicDivisor : public Error {
 public:
  NonMonicDivisor() : Error("divisor is not monic") {}
};

/// An enumeration would visit more candidates than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, const std::string& needed,
                 unsigned long long budget)
      : Error(what + " needs " + needed + " candidates, budget is " +
              std::to_string(budget)) {}
};

/// A division that must be exact was not. Always a bug.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(const std::string& where)
      : Error("internal error: inexact division in " + where) {}
};

class NotPrimePower : public Error {
 public:
  explicit NotPrimePower(unsigned long value)
      : Error(std::to_string(value) + " is not a prime power") {}
};

class DegreeOneUnsupported : public Error {
 public:
  DegreeOneUnsupported()
      : Error("degree d = 1 is not supported (beta with nu = 0 is undefined)") {}
};

/// A requested method does not apply to the given arguments.
class MethodNotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat_mld

#endif  // FERMAT_MLD_ERRORS_HPP
