#include "fermat_mld/number_theory.hpp"

#include <stdexcept>

namespace fermat_mld {

std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<unsigned long> low, high;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
  if (n == 0) throw std::invalid_argument("distinct_prime_factors: n must be positive");
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

unsigned long euler_totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt power(long base, unsigned long exponent) {
  BigInt b = base, r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

}  // namespace fermat_mld
