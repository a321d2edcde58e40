#include "cubeperm/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "cubeperm/primes.hpp"

namespace cubeperm {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_limit(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("sieve: limit must be >= 1");
  if (limit > kMaxSieveLimit) {
    throw std::invalid_argument("sieve: limit " + std::to_string(limit) + " exceeds 10^9");
  }
}

// All members of a degenerate selector up to limit: products of the allowed
// divisor primes (each at most once when square-free is required).
std::vector<std::uint64_t> smooth_members(const PrimeSet& primes, std::uint64_t limit,
                                          bool squarefree) {
  std::vector<std::uint64_t> out{1};
  for (std::uint64_t p : primes.primes()) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      std::uint64_t v = out[i];
      while (v <= limit / p) {
        v *= p;
        out.push_back(v);
        if (squarefree) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t smooth_count_from(std::span<const std::uint64_t> primes, std::size_t idx,
                                std::uint64_t budget) {
  const std::uint64_t p = primes[idx];
  if (idx + 1 == primes.size()) {
    std::uint64_t k = 1;
    for (std::uint64_t v = budget; v >= p; v /= p) ++k;
    return k;
  }
  std::uint64_t total = 0;
  for (std::uint64_t v = budget;; v /= p) {
    total += smooth_count_from(primes, idx + 1, v);
    if (v < p) break;
  }
  return total;
}

struct SegmentTally {
  std::uint64_t total = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> partial;  // checkpoint index, count in [lo, n]
};

}  // namespace

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end()) {
    throw std::invalid_argument("PrimeSet: duplicate prime");
  }
  for (std::uint64_t p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
  }
}

SegmentSieve::SegmentSieve(CongruenceSelector selector, std::uint64_t limit)
    : selector_(std::move(selector)), limit_(limit) {
  check_limit(limit);
  for (std::uint32_t p : primes_up_to(isqrt(limit))) {
    (selector_.forbids_prime(p) ? forbidden_ : allowed_).push_back(p);
  }
}

void SegmentSieve::run(std::uint64_t lo, std::uint64_t hi, SegmentBuffer& buf) const {
  if (lo < 1 || hi <= lo || hi > limit_ + 1 || hi - lo > kSegmentSize) {
    throw std::invalid_argument("SegmentSieve::run: bad window");
  }
  const std::uint64_t len = hi - lo;
  const std::uint64_t top = hi - 1;
  buf.member.assign(len, 1);
  buf.smooth_part.assign(len, 1);
  auto* member = buf.member.data();
  auto* smooth = buf.smooth_part.data();
  auto first_multiple = [lo](std::uint64_t d) { return (lo + d - 1) / d * d - lo; };

  for (std::uint64_t p : forbidden_) {
    if (p > top) break;
    for (std::uint64_t i = first_multiple(p); i < len; i += p) member[i] = 0;
  }
  const bool squarefree = selector_.squarefree_only();
  for (std::uint64_t p : allowed_) {
    if (p > top) break;
    const auto pp = static_cast<std::uint32_t>(p);
    for (std::uint64_t i = first_multiple(p); i < len; i += p) smooth[i] *= pp;
    for (std::uint64_t q = p * p; q <= top; q *= p) {
      if (squarefree) {
        for (std::uint64_t i = first_multiple(q); i < len; i += q) member[i] = 0;
        break;
      }
      for (std::uint64_t i = first_multiple(q); i < len; i += q) smooth[i] *= pp;
      if (q > top / p) break;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (!member[i]) continue;
    const std::uint64_t rest = (lo + i) / smooth[i];
    if (rest > 1 && selector_.forbids_prime(rest)) member[i] = 0;
  }
}

std::uint64_t SegmentSieve::count(std::uint64_t lo, std::uint64_t hi, SegmentBuffer& buf) const {
  run(lo, hi, buf);
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < hi - lo; ++i) c += buf.member[i];
  return c;
}

std::vector<std::uint64_t> normalize_checkpoints(std::span<const std::uint64_t> checkpoints,
                                                 std::uint64_t limit) {
  std::vector<std::uint64_t> out(checkpoints.begin(), checkpoints.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && (out.front() < 1 || out.back() > limit)) {
    throw std::invalid_argument("checkpoints must lie in [1, " + std::to_string(limit) + "]");
  }
  return out;
}

std::vector<std::uint64_t> decades(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 10; d <= limit; d *= 10) {
    out.push_back(d);
    if (d > UINT64_MAX / 10) break;
  }
  return out;
}

CountTable count_members(const CongruenceSelector& sel, std::uint64_t limit,
                         std::span<const std::uint64_t> checkpoints, unsigned workers) {
  check_limit(limit);
  const auto points = normalize_checkpoints(checkpoints, limit);
  CountTable table{sel, {}};
  table.checkpoints.reserve(points.size());

  if (sel.degenerate()) {
    const PrimeSet allowed(sel.allowed_divisor_primes());
    const auto members = smooth_members(allowed, limit, sel.squarefree_only());
    for (std::uint64_t n : points) {
      const auto c = static_cast<std::uint64_t>(
          std::upper_bound(members.begin(), members.end(), n) - members.begin());
      table.checkpoints.push_back({n, c, std::nullopt, std::nullopt});
    }
    return table;
  }

  const SegmentSieve sieve(sel, limit);
  const std::uint64_t segments = (limit + kSegmentSize - 1) / kSegmentSize;
  std::vector<SegmentTally> tallies(segments);

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    SegmentBuffer buf;
    for (std::uint64_t s = next++; s < segments; s = next++) {
      const std::uint64_t lo = 1 + s * kSegmentSize;
      const std::uint64_t hi = std::min(limit + 1, lo + kSegmentSize);
      sieve.run(lo, hi, buf);
      auto& tally = tallies[s];
      auto cp = std::lower_bound(points.begin(), points.end(), lo);
      std::uint64_t running = 0;
      for (std::uint64_t i = 0; i < hi - lo; ++i) {
        running += buf.member[i];
        while (cp != points.end() && *cp == lo + i) {
          tally.partial.emplace_back(static_cast<std::size_t>(cp - points.begin()), running);
          ++cp;
        }
      }
      tally.total = running;
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(segments)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<std::uint64_t> counts(points.size(), 0);
  std::uint64_t before = 0;
  for (const auto& tally : tallies) {
    for (auto [idx, partial] : tally.partial) counts[idx] = before + partial;
    before += tally.total;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    table.checkpoints.push_back({points[i], counts[i], std::nullopt, std::nullopt});
  }
  return table;
}

void for_each_member(const CongruenceSelector& sel, std::uint64_t limit,
                     const std::function<void(std::uint64_t)>& visit) {
  check_limit(limit);
  if (sel.degenerate()) {
    const PrimeSet allowed(sel.allowed_divisor_primes());
    for (std::uint64_t n : smooth_members(allowed, limit, sel.squarefree_only())) visit(n);
    return;
  }
  const SegmentSieve sieve(sel, limit);
  SegmentBuffer buf;
  for (std::uint64_t lo = 1; lo <= limit; lo += kSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kSegmentSize);
    sieve.run(lo, hi, buf);
    for (std::uint64_t i = 0; i < hi - lo; ++i) {
      if (buf.member[i]) visit(lo + i);
    }
  }
}

std::vector<std::uint64_t> enumerate_members(const CongruenceSelector& sel, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_member(sel, limit, [&](std::uint64_t n) { out.push_back(n); });
  return out;
}

std::uint64_t count_smooth(const PrimeSet& primes, std::uint64_t limit) {
  if (primes.empty()) throw std::invalid_argument("count_smooth: prime set is empty");
  if (limit < 1) throw std::invalid_argument("count_smooth: limit must be >= 1");
  return smooth_count_from(primes.primes(), 0, limit);
}

std::uint64_t count_squarefree_smooth(const PrimeSet& primes, std::uint64_t limit) {
  return smooth_members(primes, limit, true).size();
}

double degenerate_asymptotic(const PrimeSet& primes, double n) {
  if (primes.empty()) throw std::invalid_argument("degenerate_asymptotic: prime set is empty");
  if (!(n > 1.0)) throw std::domain_error("degenerate_asymptotic: n must exceed 1");
  const double k = static_cast<double>(primes.size());
  double denom = std::tgamma(k + 1.0);
  for (std::uint64_t p : primes.primes()) denom *= std::log(static_cast<double>(p));
  return std::pow(std::log(n), k) / denom;
}

}  // namespace cubeperm
