#include "cubeperm/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace cubeperm {

namespace {

constexpr std::uint64_t kTrialBound = 1u << 12;

std::uint64_t icbrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n must be odd and composite.
std::uint64_t find_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = find_divisor(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

FactoredInteger::FactoredInteger(std::uint64_t n) : n_(n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::map<std::uint64_t, unsigned> found;
  std::uint64_t rest = n;
  const std::uint64_t bound = std::min(kTrialBound, icbrt(n) + 1);
  auto strip = [&](std::uint64_t p) {
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  };
  strip(2);
  for (std::uint64_t p = 3; p <= bound && p * p <= rest; p += 2) strip(p);
  split_into(rest, found);
  factors_.reserve(found.size());
  for (auto [p, e] : found) factors_.push_back({p, e});
}

unsigned FactoredInteger::valuation(std::uint64_t p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, std::uint64_t q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

bool FactoredInteger::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

FactoredInteger factorize(std::uint64_t n) { return FactoredInteger(n); }

std::uint64_t euler_totient(std::uint64_t m) {
  if (m == 0) throw std::domain_error("euler_totient: m must be positive");
  std::uint64_t phi = m;
  for (const auto& f : factorize(m).factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

bool is_squarefree(std::uint64_t n) { return factorize(n).squarefree(); }

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::domain_error("legendre: p must be an odd prime, got " + std::to_string(p));
  }
  const auto pm = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % pm) + pm) % pm);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool power_map_is_bijection(std::uint64_t n, unsigned k) {
  if (n == 0) throw std::domain_error("power_map_is_bijection: n must be positive");
  if (k == 0) throw std::domain_error("power_map_is_bijection: exponent must be >= 1");
  if (n == 1 || k == 1) return true;
  std::vector<std::uint8_t> seen(n, 0);
  if (k == 3 && n < (std::uint64_t{1} << 62)) {
    // (x+1)^3 = x^3 + 3x^2 + 3x + 1 and (x+1)^2 = x^2 + 2x + 1, all mod n.
    auto add = [n](std::uint64_t a, std::uint64_t b) {
      const std::uint64_t t = a + b;
      return t >= n ? t - n : t;
    };
    const std::uint64_t one = 1 % n;
    std::uint64_t cube = 0, square = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (seen[cube]) return false;
      seen[cube] = 1;
      const std::uint64_t two_x = add(x, x);
      cube = add(add(cube, add(add(square, square), square)), add(add(two_x, x), one));
      square = add(square, add(two_x, one));
    }
    return true;
  }
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t y = pow_mod(x, k, n);
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

CongruenceSelector::CongruenceSelector(std::uint64_t modulus,
                                       std::span<const std::int64_t> forbidden,
                                       bool squarefree_only)
    : modulus_(modulus), squarefree_only_(squarefree_only) {
  if (modulus == 0) throw std::invalid_argument("selector: modulus must be >= 1");
  forbidden_mask_.assign(modulus + 1, false);
  const auto m = static_cast<std::int64_t>(modulus);
  for (std::int64_t a : forbidden) {
    std::int64_t r = ((a % m) + m) % m;
    if (r == 0) r = m;
    forbidden_mask_[static_cast<std::uint64_t>(r)] = true;
  }
  for (std::uint64_t r = 1; r <= modulus; ++r) {
    if (!forbidden_mask_[r]) continue;
    forbidden_.push_back(r);
    if (gcd(r, modulus) == 1) ++ell_;
  }
  phi_ = euler_totient(modulus);
}

CongruenceSelector::CongruenceSelector(std::uint64_t modulus,
                                       std::initializer_list<std::int64_t> forbidden,
                                       bool squarefree_only)
    : CongruenceSelector(modulus, std::span<const std::int64_t>(forbidden.begin(), forbidden.size()),
                         squarefree_only) {}

CongruenceSelector CongruenceSelector::cube_bijective() { return {3, {1}, true}; }
CongruenceSelector CongruenceSelector::no_one_mod_three() { return {3, {1}, false}; }
CongruenceSelector CongruenceSelector::squarefree() { return {1, {}, true}; }

std::uint64_t CongruenceSelector::normalize(std::uint64_t r) const {
  r %= modulus_;
  return r == 0 ? modulus_ : r;
}

std::vector<std::uint64_t> CongruenceSelector::allowed_divisor_primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& f : factorize(modulus_).factors()) {
    if (!forbids_prime(f.prime)) out.push_back(f.prime);
  }
  return out;
}

bool is_member(const FactoredInteger& n, const CongruenceSelector& sel) {
  for (const auto& f : n.factors()) {
    if (sel.squarefree_only() && f.exponent > 1) return false;
    if (sel.forbids_prime(f.prime)) return false;
  }
  return true;
}

bool is_member(std::uint64_t n, const CongruenceSelector& sel) {
  return is_member(factorize(n), sel);
}

}  // namespace cubeperm
