#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyprimes::sieve {

// Smallest-prime-factor table over [0, limit]; spf(0) = spf(1) = 0.
class PrimeTable {
 public:
  PrimeTable() = default;
  explicit PrimeTable(std::int64_t limit);

  std::int64_t limit() const noexcept { return limit_; }
  std::uint32_t spf(std::int64_t n) const { return spf_[static_cast<std::size_t>(n)]; }
  bool is_prime(std::int64_t n) const noexcept {
    return n >= 2 && n <= limit_ && spf_[static_cast<std::size_t>(n)] == n;
  }
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }

  // Distinct prime factors in increasing order. Requires 1 <= n <= limit.
  std::vector<std::uint32_t> distinct_factors(std::int64_t n) const;
  // Membership over [0, upto]; upto <= limit.
  std::vector<bool> indicator(std::int64_t upto) const;

  // Binary cache: magic "PPSPF001", u32 version, u64 limit, then limit+1
  // little-endian u32 spf entries.
  void save(const std::string& path) const;
  static PrimeTable load(const std::string& path);

 private:
  void rebuild_primes();

  std::int64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int64_t> primes_;
};

PrimeTable build_prime_table(std::int64_t limit);

// Loads the cache at path if it exists and covers limit, otherwise builds
// the table and writes the cache.
PrimeTable cached_prime_table(std::int64_t limit, const std::string& path);

}  // namespace polyprimes::sieve
