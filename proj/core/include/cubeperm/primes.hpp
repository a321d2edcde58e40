#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cubeperm {

/// All primes <= limit, ascending. limit must fit in 32 bits.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Shared, grow-only prime list. Safe to call from several threads; once
/// returned, a table is immutable.
class PrimeTable {
 public:
  static std::shared_ptr<const PrimeTable> at_least(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> all() const { return primes_; }
  /// Primes <= bound (bound may not exceed limit()).
  std::span<const std::uint32_t> up_to(std::uint64_t bound) const;

  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace cubeperm
