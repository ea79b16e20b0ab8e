#ifndef FERMAT_MLD_NUMBER_THEORY_HPP
#define FERMAT_MLD_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fermat_mld {

using BigInt = mpz_class;

/// Positive divisors of n in ascending order. n must be positive.
std::vector<unsigned long> divisors(unsigned long n);

/// Distinct prime factors of n in ascending order (empty for n = 1).
std::vector<unsigned long> distinct_prime_factors(unsigned long n);

unsigned long euler_totient(unsigned long n);

bool is_prime(unsigned long n);

BigInt factorial(unsigned long n);

BigInt binomial(unsigned long n, unsigned long k);

/// base^exponent for a (possibly negative) machine-size base.
BigInt power(long base, unsigned long exponent);

}  // namespace fermat_mld

#endif  // FERMAT_MLD_NUMBER_THEORY_HPP
