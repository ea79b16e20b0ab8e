#ifndef FERMAT_MLD_CLI_BETA_CACHE_HPP
#define FERMAT_MLD_CLI_BETA_CACHE_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "fermat_mld/errors.hpp"
#include "fermat_mld/mldegree.hpp"

namespace fermat_mld::cli {

/// Malformed cache contents or an unknown format version.
class CacheFormatError : public Error {
 public:
  using Error::Error;
};

/// A fresh value disagrees with the cached one.
class CacheConflict : public Error {
 public:
  using Error::Error;
};

/// Persistent map (mu, nu) -> beta(mu, nu).
///
/// File format, one record per line:
///
///     # fermat-mld beta-cache v1
///     mu,nu,beta
///     ...
///
/// Rows are decimal and sorted by (nu, mu). Any other header is refused.
class BetaCache {
 public:
  static constexpr const char* kHeader = "# fermat-mld beta-cache v1";

  BetaCache() = default;

  /// Missing file yields an empty cache.
  static BetaCache load(const std::filesystem::path& path);
  static BetaCache read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  void write(std::ostream& out) const;

  std::optional<BigInt> find(unsigned mu, unsigned nu) const;
  /// Throws CacheConflict if (mu, nu) is already stored with another value.
  void insert(unsigned mu, unsigned nu, const BigInt& value);

  std::size_t size() const noexcept { return entries_.size(); }
  bool dirty() const noexcept { return dirty_; }

  friend bool operator==(const BetaCache& a, const BetaCache& b) {
    return a.entries_ == b.entries_;
  }

 private:
  // Keyed (nu, mu) so iteration order is the on-disk order.
  std::map<std::pair<unsigned, unsigned>, BigInt> entries_;
  bool dirty_ = false;
};

struct CacheStats {
  unsigned long hits = 0;
  unsigned long misses = 0;
};

/// Serves beta from the cache when possible and records fresh values.
/// Not thread-safe; commands consult it from one thread.
class CachingBetaSource {
 public:
  CachingBetaSource(BetaCache& cache, BetaSource fallback);

  BetaRecord operator()(unsigned mu, unsigned nu);
  const CacheStats& stats() const noexcept { return stats_; }

 private:
  BetaCache* cache_;
  BetaSource fallback_;
  CacheStats stats_;
};

}  // namespace fermat_mld::cli

#endif  // FERMAT_MLD_CLI_BETA_CACHE_HPP
