#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cubeperm {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization, primes strictly
/// increasing. Holds the p-adic valuations of the number.
class FactoredInteger {
 public:
  explicit FactoredInteger(std::uint64_t n);

  std::uint64_t value() const { return n_; }
  std::span<const PrimePower> factors() const& { return factors_; }
  std::vector<PrimePower> factors() && { return std::move(factors_); }

  unsigned valuation(std::uint64_t p) const;
  bool squarefree() const;

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Deterministic for every 64-bit input (fixed Miller-Rabin witness set).
bool is_prime(std::uint64_t n);

/// Throws std::domain_error for n == 0.
FactoredInteger factorize(std::uint64_t n);

std::uint64_t euler_totient(std::uint64_t m);
bool is_squarefree(std::uint64_t n);

/// Legendre symbol (a|p) by Euler's criterion. p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Brute force: does x -> x^k permute Z/nZ? Stops at the first collision.
bool power_map_is_bijection(std::uint64_t n, unsigned k);

/// The set I_m(A), optionally intersected with the square-free integers.
///
/// Residues are normalized into {1, ..., m}; a residue congruent to 0 is
/// stored as m. A prime p is forbidden when its normalized residue is in A.
class CongruenceSelector {
 public:
  CongruenceSelector(std::uint64_t modulus, std::span<const std::int64_t> forbidden,
                     bool squarefree_only);
  CongruenceSelector(std::uint64_t modulus, std::initializer_list<std::int64_t> forbidden,
                     bool squarefree_only);

  /// x -> x^3 is a bijection of Z/nZ.
  static CongruenceSelector cube_bijective();
  /// No prime factor = 1 mod 3.
  static CongruenceSelector no_one_mod_three();
  static CongruenceSelector squarefree();

  std::uint64_t modulus() const { return modulus_; }
  std::span<const std::uint64_t> forbidden() const { return forbidden_; }
  bool squarefree_only() const { return squarefree_only_; }

  std::uint64_t normalize(std::uint64_t r) const;
  bool forbids_residue(std::uint64_t r) const { return forbidden_mask_[normalize(r)]; }
  bool forbids_prime(std::uint64_t p) const { return forbids_residue(p); }

  /// Number of forbidden residues coprime to the modulus.
  std::uint64_t coprime_forbidden_count() const { return ell_; }
  std::uint64_t totient() const { return phi_; }

  /// Every unit class is forbidden; only primes dividing the modulus remain.
  bool degenerate() const { return ell_ == phi_; }

  /// Prime divisors of the modulus whose class is not forbidden.
  std::vector<std::uint64_t> allowed_divisor_primes() const;

  friend bool operator==(const CongruenceSelector& a, const CongruenceSelector& b) {
    return a.modulus_ == b.modulus_ && a.forbidden_ == b.forbidden_ &&
           a.squarefree_only_ == b.squarefree_only_;
  }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> forbidden_;
  std::vector<bool> forbidden_mask_;  // indexed 0..m, entry 0 unused
  bool squarefree_only_;
  std::uint64_t ell_ = 0;
  std::uint64_t phi_ = 1;
};

bool is_member(std::uint64_t n, const CongruenceSelector& sel);
bool is_member(const FactoredInteger& n, const CongruenceSelector& sel);

}  // namespace cubeperm
