#ifndef FERMAT_MLD_EXPONENT_MULTISET_HPP
#define FERMAT_MLD_EXPONENT_MULTISET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fermat_mld/number_theory.hpp"

namespace fermat_mld {

/// Counts m_0..m_{nu-1}: how many terms of a sum equal zeta^i for a fixed
/// primitive nu-th root of unity zeta. An unordered tuple of nu-th roots.
class ExponentMultiset {
 public:
  explicit ExponentMultiset(std::vector<unsigned> counts);

  /// Multiset of the given exponents (each reduced mod nu).
  static ExponentMultiset from_exponents(unsigned nu,
                                         std::span<const unsigned> exponents);

  unsigned nu() const noexcept { return static_cast<unsigned>(counts_.size()); }
  unsigned weight() const noexcept { return weight_; }
  unsigned count(unsigned i) const { return counts_.at(i); }
  std::span<const unsigned> counts() const noexcept { return counts_; }

  /// Number of ordered tuples realizing this multiset: mu! / prod m_i!.
  BigInt multinomial() const;

  /// Image under zeta -> zeta^k, i.e. index i moves to k*i mod nu.
  ExponentMultiset galois_conjugate(unsigned k) const;

  std::string to_string() const;

  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

 private:
  std::vector<unsigned> counts_;
  unsigned weight_ = 0;
};

/// Visits every multiset of the given weight over nu slots exactly once, in
/// lexicographic order of the counts vector (m_0 ascending first). There
/// are C(weight + nu - 1, nu - 1) of them.
class MultisetEnumerator {
 public:
  MultisetEnumerator(unsigned nu, unsigned weight);

  /// Current counts, or nullptr once the enumeration is exhausted.
  const std::vector<unsigned>* current() const {
    return done_ ? nullptr : &counts_;
  }
  void advance();

 private:
  std::vector<unsigned> counts_;
  bool done_ = false;
};

}  // namespace fermat_mld

#endif  // FERMAT_MLD_EXPONENT_MULTISET_HPP
