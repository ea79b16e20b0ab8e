#include "fermat_mld/cli/beta_cache.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace fermat_mld::cli {

namespace {

unsigned parse_field(const std::string& text, const std::string& line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw CacheFormatError("bad beta-cache row: " + line);
  try {
    const unsigned long v = std::stoul(text);
    if (v > 0xffffffffUL) throw CacheFormatError("beta-cache index out of range: " + line);
    return static_cast<unsigned>(v);
  } catch (const std::out_of_range&) {
    throw CacheFormatError("beta-cache index out of range: " + line);
  }
}

}  // namespace

BetaCache BetaCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return {};
    throw CacheFormatError("cannot open beta cache " + path.string());
  }
  return read(in);
}

BetaCache BetaCache::read(std::istream& in) {
  BetaCache cache;
  std::string line;
  if (!std::getline(in, line)) return cache;
  if (line != kHeader) throw CacheFormatError("unsupported beta-cache header: " + line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string mu, nu, value;
    if (!std::getline(fields, mu, ',') || !std::getline(fields, nu, ',') ||
        !std::getline(fields, value) || value.empty() ||
        value.find_first_not_of("0123456789") != std::string::npos)
      throw CacheFormatError("bad beta-cache row: " + line);
    const unsigned n = parse_field(nu, line);
    if (n == 0) throw CacheFormatError("bad beta-cache row: " + line);
    cache.insert(parse_field(mu, line), n, BigInt(value));
  }
  cache.dirty_ = false;
  return cache;
}

void BetaCache::save(const std::filesystem::path& path) const {
  // Write next to the target and rename, so readers never see a torn file.
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write beta cache " + tmp.string());
    write(out);
    if (!out) throw Error("cannot write beta cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void BetaCache::write(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& [key, value] : entries_)
    out << key.second << ',' << key.first << ',' << value.get_str() << '\n';
}

std::optional<BigInt> BetaCache::find(unsigned mu, unsigned nu) const {
  if (auto it = entries_.find({nu, mu}); it != entries_.end()) return it->second;
  return std::nullopt;
}

void BetaCache::insert(unsigned mu, unsigned nu, const BigInt& value) {
  auto [it, inserted] = entries_.emplace(std::pair{nu, mu}, value);
  if (!inserted && it->second != value)
    throw CacheConflict("beta(" + std::to_string(mu) + "," + std::to_string(nu) +
                        "): cached " + it->second.get_str() + ", computed " +
                        value.get_str());
  dirty_ = dirty_ || inserted;
}

CachingBetaSource::CachingBetaSource(BetaCache& cache, BetaSource fallback)
    : cache_(&cache), fallback_(std::move(fallback)) {}

BetaRecord CachingBetaSource::operator()(unsigned mu, unsigned nu) {
  if (auto hit = cache_->find(mu, nu)) {
    ++stats_.hits;
    return {mu, nu, *hit, auto_method(mu, nu), CountKind::beta};
  }
  ++stats_.misses;
  BetaRecord record = fallback_(mu, nu);
  cache_->insert(mu, nu, record.value);
  return record;
}

}  // namespace fermat_mld::cli
