#ifndef FERMAT_MLD_COUNTING_HPP
#define FERMAT_MLD_COUNTING_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fermat_mld/number_theory.hpp"

namespace fermat_mld {

// beta(mu, nu): ordered mu-tuples of nu-th roots of unity with z_1+...+z_mu = -1.
// alpha(mu, nu): ordered mu-tuples of nu-th roots of unity with z_1+...+z_mu = 0.
// alpha(mu, nu) = nu * beta(mu - 1, nu).

enum class BetaMethod { brute, symmetric, closed_small, prime_power };

std::string_view to_string(BetaMethod method);
std::optional<BetaMethod> parse_beta_method(std::string_view name);

enum class CountKind { beta, alpha };

struct BetaRecord {
  unsigned mu = 0;
  unsigned nu = 1;
  BigInt value;
  BetaMethod method = BetaMethod::symmetric;
  CountKind kind = CountKind::beta;
};

/// nu = p^r with p prime; k = nu / p is the number of cosets of the
/// p-th roots of unity inside the nu-th roots.
struct PrimePowerForm {
  unsigned p;
  unsigned r;
  unsigned k;

  unsigned nu() const noexcept { return p * k; }
  /// nullopt unless nu = p^r with r >= 1.
  static std::optional<PrimePowerForm> of(unsigned nu);
};

struct EnumerationOptions {
  /// Cap on nu^mu ordered tuples for the brute-force oracle.
  unsigned long long tuple_budget = 100'000'000ULL;
  /// Cap on C(mu + nu - 1, nu - 1) multisets for symmetric enumeration.
  unsigned long long multiset_budget = 1'000'000'000ULL;
  /// Worker threads for multiset enumeration; the result does not depend on it.
  unsigned threads = 1;
};

/// Counts ordered tuples one by one, testing each with vanishing_sum_test.
BigInt beta_bruteforce(unsigned mu, unsigned nu, const EnumerationOptions& options = {});

/// Enumerates exponent multisets of weight mu and adds the multinomial
/// weight of every one whose sum is -1.
BigInt beta_symmetric(unsigned mu, unsigned nu, const EnumerationOptions& options = {});

/// Same enumeration for sums equal to 0. alpha_direct(0, nu) = 1 (empty sum).
BigInt alpha_direct(unsigned mu, unsigned nu, const EnumerationOptions& options = {});

/// nu * beta(mu - 1, nu) using resolve_beta. Requires mu >= 1.
BigInt alpha_from_beta(unsigned mu, unsigned nu, const EnumerationOptions& options = {});

/// Closed forms for nu = 1, mu = 1 and mu = 2; nullopt elsewhere.
std::optional<BigInt> beta_closed_small(unsigned mu, unsigned nu);

/// Coset-decomposition sum for nu = p^r.
BigInt beta_prime_power(unsigned mu, const PrimePowerForm& form);
BigInt alpha_prime_power(unsigned mu, const PrimePowerForm& form);

/// True iff mu is a nonnegative integer combination of the distinct primes
/// dividing nu. Always false for nu = 1.
bool lam_leung_nonvanishing(unsigned mu, unsigned nu);

/// Evaluates beta with the named method. Throws MethodNotApplicable when the
/// method does not cover (mu, nu), BudgetExceeded for oversized enumerations.
BetaRecord compute_beta(unsigned mu, unsigned nu, BetaMethod method,
                        const EnumerationOptions& options = {});

/// Method resolve_beta picks for (mu, nu).
BetaMethod auto_method(unsigned mu, unsigned nu);

/// Fastest exact route: closed_small, then prime_power, then symmetric.
BetaRecord resolve_beta(unsigned mu, unsigned nu, const EnumerationOptions& options = {});

/// Sum of mu!/prod(m_i!) over every multiset of weight mu on nu slots.
/// Equals nu^mu when the enumeration is complete.
BigInt multiset_mass(unsigned mu, unsigned nu);

/// Calls visit once per composition of total into the given number of
/// nonnegative parts. parts = 0 admits only total = 0 (the empty composition).
void for_each_composition(unsigned total, unsigned parts,
                          const std::function<void(std::span<const unsigned>)>& visit);

}  // namespace fermat_mld

#endif  // FERMAT_MLD_COUNTING_HPP
