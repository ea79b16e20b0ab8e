#include "fermat_mld/exponent_multiset.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fermat_mld {

ExponentMultiset::ExponentMultiset(std::vector<unsigned> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty())
    throw std::invalid_argument("ExponentMultiset: nu must be at least 1");
  weight_ = std::accumulate(counts_.begin(), counts_.end(), 0u);
}

ExponentMultiset ExponentMultiset::from_exponents(
    unsigned nu, std::span<const unsigned> exponents) {
  if (nu == 0) throw std::invalid_argument("ExponentMultiset: nu must be at least 1");
  std::vector<unsigned> counts(nu, 0);
  for (unsigned e : exponents) ++counts[e % nu];
  return ExponentMultiset(std::move(counts));
}

BigInt ExponentMultiset::multinomial() const {
  BigInt result = factorial(weight_);
  for (unsigned m : counts_) {
    if (m < 2) continue;
    BigInt f = factorial(m);
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), f.get_mpz_t());
  }
  return result;
}

ExponentMultiset ExponentMultiset::galois_conjugate(unsigned k) const {
  const unsigned long n = nu();
  std::vector<unsigned> image(n, 0);
  for (unsigned long i = 0; i < n; ++i)
    image[(static_cast<unsigned long>(k) * i) % n] += counts_[i];
  return ExponentMultiset(std::move(image));
}

std::string ExponentMultiset::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  os << ')';
  return os.str();
}

MultisetEnumerator::MultisetEnumerator(unsigned nu, unsigned weight)
    : counts_(nu, 0) {
  if (nu == 0) throw std::invalid_argument("MultisetEnumerator: nu must be at least 1");
  counts_.back() = weight;
}

void MultisetEnumerator::advance() {
  if (done_) return;
  // Lexicographic successor with fixed total: bump the rightmost slot that
  // still has mass to its right, then dump the remaining mass in the last slot.
  unsigned tail = counts_.back();
  for (std::size_t i = counts_.size() - 1; i-- > 0;) {
    if (tail > 0) {
      ++counts_[i];
      for (std::size_t j = i + 1; j < counts_.size(); ++j) counts_[j] = 0;
      counts_.back() = tail - 1;
      return;
    }
    tail += counts_[i];
  }
  done_ = true;
}

}  // namespace fermat_mld
