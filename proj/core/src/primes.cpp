#include "cubeperm/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace cubeperm {

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("primes_up_to: limit exceeds 2^32 - 1");
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.reserve(static_cast<std::size_t>(1.1 * limit / std::max(1.0, std::log(double(limit)) - 1.0)) + 16);
  primes.push_back(2);

  // Odd-only segmented sieve; index i stands for lo + 2i.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint8_t> small(root + 1, 1);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  constexpr std::uint64_t kSpan = 1u << 18;
  std::vector<std::uint8_t> seg(kSpan);
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSpan) {
    const std::uint64_t hi = std::min(limit, lo + 2 * kSpan - 1);
    const std::uint64_t count = (hi - lo) / 2 + 1;
    std::fill(seg.begin(), seg.begin() + count, 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t j = (start - lo) / 2; j < count; j += p) seg[j] = 0;
    }
    for (std::uint64_t j = 0; j < count; ++j) {
      if (seg[j]) primes.push_back(static_cast<std::uint32_t>(lo + 2 * j));
    }
  }
  return primes;
}

std::shared_ptr<const PrimeTable> PrimeTable::at_least(std::uint64_t limit) {
  static std::mutex mu;
  static std::shared_ptr<const PrimeTable> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->limit() < limit) {
    cached = std::make_shared<const PrimeTable>(limit, primes_up_to(limit));
  }
  return cached;
}

std::span<const std::uint32_t> PrimeTable::up_to(std::uint64_t bound) const {
  if (bound > limit_) throw std::out_of_range("PrimeTable::up_to: bound beyond table");
  auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

}  // namespace cubeperm
