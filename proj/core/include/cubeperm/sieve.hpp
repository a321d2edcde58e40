#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cubeperm/arith.hpp"
#include "cubeperm/count_table.hpp"

namespace cubeperm {

inline constexpr std::uint64_t kSegmentSize = 1u << 20;
inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

/// Finite set of distinct primes, ascending.
class PrimeSet {
 public:
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }

 private:
  std::vector<std::uint64_t> primes_;
};

/// Per-worker scratch for SegmentSieve.
struct SegmentBuffer {
  std::vector<std::uint8_t> member;
  std::vector<std::uint32_t> smooth_part;
};

/// Membership sieve over windows [lo, hi) of [1, limit].
///
/// Multiples of forbidden primes <= sqrt(limit) are struck out, as are
/// multiples of p^2 when square-free members are required. The remaining
/// factors <= sqrt(limit) are multiplied into smooth_part; what is left of
/// n after dividing by it is 1 or a single prime, checked against the
/// forbidden classes directly.
class SegmentSieve {
 public:
  SegmentSieve(CongruenceSelector selector, std::uint64_t limit);

  const CongruenceSelector& selector() const { return selector_; }
  std::uint64_t limit() const { return limit_; }

  /// Fills buf.member[i] for n = lo + i. Requires 1 <= lo < hi <= limit + 1
  /// and hi - lo <= kSegmentSize.
  void run(std::uint64_t lo, std::uint64_t hi, SegmentBuffer& buf) const;
  std::uint64_t count(std::uint64_t lo, std::uint64_t hi, SegmentBuffer& buf) const;

 private:
  CongruenceSelector selector_;
  std::uint64_t limit_;
  std::vector<std::uint32_t> allowed_;    // base primes whose class is allowed
  std::vector<std::uint32_t> forbidden_;  // base primes whose class is forbidden
};

/// Sorted, de-duplicated checkpoints within [1, limit]; throws
/// std::invalid_argument otherwise.
std::vector<std::uint64_t> normalize_checkpoints(std::span<const std::uint64_t> checkpoints,
                                                 std::uint64_t limit);

/// 10, 100, ... up to limit.
std::vector<std::uint64_t> decades(std::uint64_t limit);

/// Exact counts of the selected set at each checkpoint. Degenerate selectors
/// are counted as smooth numbers over the allowed prime divisors. Results do
/// not depend on the number of workers.
CountTable count_members(const CongruenceSelector& sel, std::uint64_t limit,
                         std::span<const std::uint64_t> checkpoints, unsigned workers = 1);

/// Calls visit(n) for every member n <= limit in increasing order.
void for_each_member(const CongruenceSelector& sel, std::uint64_t limit,
                     const std::function<void(std::uint64_t)>& visit);

std::vector<std::uint64_t> enumerate_members(const CongruenceSelector& sel, std::uint64_t limit);

/// |{ prod p_i^{x_i} <= limit }| by depth-first enumeration of exponents.
std::uint64_t count_smooth(const PrimeSet& primes, std::uint64_t limit);

/// Square-free products of the set that are <= limit.
std::uint64_t count_squarefree_smooth(const PrimeSet& primes, std::uint64_t limit);

/// (log n)^k / (k! prod log p): volume of the scaled simplex.
double degenerate_asymptotic(const PrimeSet& primes, double n);

}  // namespace cubeperm
