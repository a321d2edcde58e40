#include "cubeperm/characters.hpp"

#include <numbers>
#include <stdexcept>

#include "cubeperm/arith.hpp"
#include "cubeperm/special_functions.hpp"

namespace cubeperm {

namespace {

struct Generator {
  std::uint64_t element;  // as a residue mod m
  std::uint64_t order;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplicative order of g mod n, for g a unit.
std::uint64_t order_mod(std::uint64_t g, std::uint64_t n, std::uint64_t group_order) {
  std::uint64_t ord = group_order;
  for (const auto& f : factorize(group_order).factors()) {
    for (unsigned i = 0; i < f.exponent && ord % f.prime == 0; ++i) {
      if (pow_mod(g, ord / f.prime, n) != 1) break;
      ord /= f.prime;
    }
  }
  return ord;
}

// x = a mod q, x = 1 mod (m / q), with gcd(q, m/q) = 1.
std::uint64_t crt_lift(std::uint64_t a, std::uint64_t q, std::uint64_t m) {
  const std::uint64_t rest = m / q;
  if (rest == 1) return a % m;
  for (std::uint64_t t = 0; t < rest; ++t) {
    const std::uint64_t x = a % q + t * q;
    if (x % rest == 1 % rest) return x % m;
  }
  throw std::logic_error("crt_lift: no solution");
}

std::vector<Generator> unit_group_generators(std::uint64_t m) {
  std::vector<Generator> gens;
  if (m <= 2) return gens;
  for (const auto& f : factorize(m).factors()) {
    const std::uint64_t q = ipow(f.prime, f.exponent);
    if (f.prime == 2) {
      if (f.exponent >= 2) gens.push_back({crt_lift(q - 1, q, m), 2});
      if (f.exponent >= 3) gens.push_back({crt_lift(5, q, m), q / 4});
      continue;
    }
    const std::uint64_t phi_q = q / f.prime * (f.prime - 1);
    std::uint64_t g = 2;
    while (order_mod(g, q, phi_q) != phi_q) ++g;
    gens.push_back({crt_lift(g, q, m), phi_q});
  }
  return gens;
}

std::complex<double> root_of_unity(std::int64_t k, std::uint64_t n) {
  const auto kk = static_cast<std::uint64_t>(k) % n;
  if (kk == 0) return {1.0, 0.0};
  if (2 * kk == n) return {-1.0, 0.0};
  if (4 * kk == n) return {0.0, 1.0};
  if (4 * kk == 3 * n) return {0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(kk) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t totient,
                                       std::vector<std::int64_t> angles)
    : modulus_(modulus), totient_(totient), angles_(std::move(angles)) {
  if (modulus == 0 || angles_.size() != modulus) {
    throw std::invalid_argument("DirichletCharacter: table size must equal the modulus");
  }
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const {
  const std::int64_t k = angle(n);
  if (k == kNotUnit) return {0.0, 0.0};
  return root_of_unity(k, totient_);
}

bool DirichletCharacter::principal() const {
  for (std::int64_t k : angles_) {
    if (k != kNotUnit && k != 0) return false;
  }
  return true;
}

bool DirichletCharacter::real() const {
  for (std::int64_t k : angles_) {
    if (k != kNotUnit && (2 * static_cast<std::uint64_t>(k)) % totient_ != 0) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  auto conj = angles_;
  const auto phi = static_cast<std::int64_t>(totient_);
  for (auto& k : conj) {
    if (k != kNotUnit) k = (phi - k) % phi;
  }
  return {modulus_, totient_, std::move(conj)};
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("characters_mod: m must be >= 1");
  const std::uint64_t phi = euler_totient(m);
  const auto gens = unit_group_generators(m);

  // Discrete logs: every unit is prod g_i^{e_i} for a unique exponent vector.
  std::vector<std::vector<std::uint64_t>> logs(m);
  std::vector<std::uint64_t> e(gens.size(), 0);
  for (std::uint64_t count = 0; count < phi; ++count) {
    std::uint64_t x = 1 % m;
    for (std::size_t i = 0; i < gens.size(); ++i) x = mul_mod(x, pow_mod(gens[i].element, e[i], m), m);
    if (m == 1) x = 0;
    logs[x] = e;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
    }
  }

  std::vector<DirichletCharacter> out;
  out.reserve(phi);
  std::vector<std::uint64_t> j(gens.size(), 0);
  for (std::uint64_t c = 0; c < phi; ++c) {
    std::vector<std::int64_t> angles(m, DirichletCharacter::kNotUnit);
    for (std::uint64_t r = 0; r < m; ++r) {
      if (gcd(r, m) != 1 && m != 1) continue;
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        k = (k + j[i] * logs[r][i] % gens[i].order * (phi / gens[i].order)) % phi;
      }
      angles[r] = static_cast<std::int64_t>(k);
    }
    out.emplace_back(m, phi, std::move(angles));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (++j[i] < gens[i].order) break;
      j[i] = 0;
    }
  }
  return out;
}

DirichletCharacter chi_mod3() { return {3, 2, {DirichletCharacter::kNotUnit, 0, 1}}; }

DirichletCharacter chi_mod4() {
  return {4, 2, {DirichletCharacter::kNotUnit, 0, DirichletCharacter::kNotUnit, 1}};
}

std::complex<double> dirichlet_L(const DirichletCharacter& chi, double s) {
  if (!(s > 1.0)) throw std::domain_error("dirichlet_L: s must exceed 1");
  const std::uint64_t m = chi.modulus();
  const double md = static_cast<double>(m);
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t r = 1; r <= m; ++r) {
    const auto v = chi(r);
    if (v == std::complex<double>{0.0, 0.0}) continue;
    sum += v * hurwitz_zeta(s, static_cast<double>(r) / md);
  }
  return sum * std::pow(md, -s);
}

}  // namespace cubeperm
