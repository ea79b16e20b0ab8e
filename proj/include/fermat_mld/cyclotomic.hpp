#ifndef FERMAT_MLD_CYCLOTOMIC_HPP
#define FERMAT_MLD_CYCLOTOMIC_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fermat_mld/exponent_multiset.hpp"
#include "fermat_mld/number_theory.hpp"

namespace fermat_mld {

/// Dense polynomial in Z[x], coefficients in ascending degree order. The
/// leading stored coefficient is never zero; the zero polynomial has no
/// coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);
  IntegerPolynomial(std::initializer_list<long> coeffs);

  static IntegerPolynomial monomial(BigInt coeff, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt for the zero polynomial (degree -infinity).
  std::optional<std::size_t> degree() const noexcept;
  bool is_monic() const;

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt evaluate(const BigInt& x) const;
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntegerPolynomial poly_add(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial poly_sub(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial poly_mul(const IntegerPolynomial& a, const IntegerPolynomial& b);

struct DivisionResult {
  IntegerPolynomial quotient;
  IntegerPolynomial remainder;
};

/// Division by a monic polynomial; exact over Z. Throws NonMonicDivisor.
DivisionResult poly_divrem_monic(const IntegerPolynomial& num,
                                 const IntegerPolynomial& den);

/// Quotient of an exact division. Throws NonzeroRemainder or NonMonicDivisor.
IntegerPolynomial poly_divexact(const IntegerPolynomial& num,
                                const IntegerPolynomial& den);

/// Order nu of the roots of unity in play; nu >= 1.
class CyclotomicOrder {
 public:
  explicit CyclotomicOrder(unsigned long nu);
  unsigned long value() const noexcept { return nu_; }

 private:
  unsigned long nu_;
};

/// Phi_nu, built as (x^nu - 1) divided by Phi_d for every proper divisor d.
/// Results are memoized in a process-wide table safe for concurrent use.
const IntegerPolynomial& cyclotomic_polynomial(CyclotomicOrder order);

/// True iff sum_i m_i zeta^i (+ 1 when add_one) is exactly zero for a
/// primitive nu-th root of unity zeta. Reduces the exponent polynomial
/// modulo Phi_nu and tests the remainder.
bool vanishing_sum_test(const ExponentMultiset& m, bool add_one);

/// Residues x^i mod Phi_nu for i in [0, nu), stored as machine integers so
/// that enumeration can accumulate sums of roots incrementally. A sum of
/// roots vanishes iff the accumulated residue vector is zero.
class PowerResidues {
 public:
  explicit PowerResidues(CyclotomicOrder order);

  unsigned long nu() const noexcept { return nu_; }
  /// phi(nu): length of every residue vector.
  std::size_t width() const noexcept { return width_; }
  /// Largest absolute residue coefficient.
  std::int64_t max_abs() const noexcept { return max_abs_; }
  const std::int64_t* row(std::size_t i) const { return &table_[i * width_]; }

 private:
  unsigned long nu_;
  std::size_t width_;
  std::int64_t max_abs_ = 0;
  std::vector<std::int64_t> table_;
};

}  // namespace fermat_mld

#endif  // FERMAT_MLD_CYCLOTOMIC_HPP
