#include "polyprimes/sieve/prime_table.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>

#include "polyprimes/error.hpp"

namespace polyprimes::sieve {

namespace {

constexpr char kMagic[8] = {'P', 'P', 'S', 'P', 'F', '0', '0', '1'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) fail(Errc::LimitTooSmall, "prime table limit must be >= 2, got " + std::to_string(limit));
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    fail(Errc::TargetTooLarge, "prime table limit " + std::to_string(limit) + " exceeds the 32-bit spf range");
  }
  // Linear sieve: every composite is crossed out once, by its smallest prime.
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    const std::uint32_t si = spf_[i];
    for (std::int64_t p : primes_) {
      if (p > si || p * i > limit) break;
      spf_[p * i] = static_cast<std::uint32_t>(p);
    }
  }
}

void PrimeTable::rebuild_primes() {
  primes_.clear();
  for (std::int64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == i) primes_.push_back(i);
  }
}

std::vector<std::uint32_t> PrimeTable::distinct_factors(std::int64_t n) const {
  if (n < 1 || n > limit_) {
    fail(Errc::FactorizationRangeExceeded,
         "cannot factor " + std::to_string(n) + " with a table up to " + std::to_string(limit_));
  }
  std::vector<std::uint32_t> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

std::vector<bool> PrimeTable::indicator(std::int64_t upto) const {
  if (upto > limit_) {
    fail(Errc::FactorizationRangeExceeded,
         "prime indicator up to " + std::to_string(upto) + " needs a larger table than " + std::to_string(limit_));
  }
  std::vector<bool> out(static_cast<std::size_t>(std::max<std::int64_t>(upto, 0)) + 1, false);
  for (std::int64_t p : primes_) {
    if (p > upto) break;
    out[p] = true;
  }
  return out;
}

void PrimeTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Errc::InvalidArgument, "cannot write prime table cache " + path);
  os.write(kMagic, sizeof kMagic);
  os.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
  const auto lim = static_cast<std::uint64_t>(limit_);
  os.write(reinterpret_cast<const char*>(&lim), sizeof lim);
  os.write(reinterpret_cast<const char*>(spf_.data()), static_cast<std::streamsize>(spf_.size() * sizeof(std::uint32_t)));
  if (!os) fail(Errc::InvalidArgument, "short write on prime table cache " + path);
}

PrimeTable PrimeTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(Errc::ParseError, path + ": cannot open prime table cache");
  char magic[8];
  std::uint32_t version = 0;
  std::uint64_t lim = 0;
  is.read(magic, sizeof magic);
  is.read(reinterpret_cast<char*>(&version), sizeof version);
  is.read(reinterpret_cast<char*>(&lim), sizeof lim);
  if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0) fail(Errc::ParseError, path + ": not a prime table cache");
  if (version != kVersion) fail(Errc::ParseError, path + ": unsupported cache version " + std::to_string(version));
  if (lim < 2 || lim > std::numeric_limits<std::uint32_t>::max()) fail(Errc::ParseError, path + ": bad limit");
  PrimeTable t;
  t.limit_ = static_cast<std::int64_t>(lim);
  t.spf_.resize(lim + 1);
  is.read(reinterpret_cast<char*>(t.spf_.data()), static_cast<std::streamsize>(t.spf_.size() * sizeof(std::uint32_t)));
  if (!is) fail(Errc::ParseError, path + ": truncated prime table cache");
  t.rebuild_primes();
  return t;
}

PrimeTable build_prime_table(std::int64_t limit) { return PrimeTable(limit); }

PrimeTable cached_prime_table(std::int64_t limit, const std::string& path) {
  if (std::filesystem::exists(path)) {
    PrimeTable t = PrimeTable::load(path);
    if (t.limit() >= limit) return t;
  }
  PrimeTable t(limit);
  t.save(path);
  return t;
}

}  // namespace polyprimes::sieve
