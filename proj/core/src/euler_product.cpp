#include "cubeperm/euler_product.hpp"

#include <cmath>
#include <limits>
#include <json.hpp>
#include <stdexcept>

#include "cubeperm/arith.hpp"
#include "cubeperm/characters.hpp"
#include "cubeperm/primes.hpp"
#include "cubeperm/special_functions.hpp"

namespace cubeperm {

std::string_view to_string(ProductMethod method) {
  switch (method) {
    case ProductMethod::truncated: return "truncated";
    case ProductMethod::accelerated: return "accelerated";
    case ProductMethod::closed_form: return "closed_form";
    case ProductMethod::extrapolated: return "extrapolated";
  }
  return "unknown";
}

std::string to_json(std::string_view name, const EulerProductResult& r) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  if (r.prime_limit) {
    j["tolerance_or_prime_limit"] = *r.prime_limit;
  } else if (r.tolerance) {
    j["tolerance_or_prime_limit"] = *r.tolerance;
  } else {
    j["tolerance_or_prime_limit"] = nullptr;
  }
  j["tail_bound"] = r.tail_bound;
  return j.dump();
}

double class_power_sum_bound(std::uint64_t m, std::uint64_t first, double sigma) {
  if (!(sigma > 1.0)) throw std::domain_error("class_power_sum_bound: sigma must exceed 1");
  const double n0 = static_cast<double>(first);
  return std::pow(n0, -sigma) + std::pow(n0, 1.0 - sigma) / (static_cast<double>(m) * (sigma - 1.0));
}

EulerProductResult progression_euler_product(std::uint64_t m, std::uint64_t a, double s,
                                             unsigned exponent_power, std::uint64_t prime_limit) {
  if (m == 0) throw std::invalid_argument("progression_euler_product: m must be >= 1");
  if (exponent_power == 0) throw std::invalid_argument("progression_euler_product: exponent must be >= 1");
  const double sigma = s * exponent_power;
  const std::uint64_t r = a % m;
  const bool finite_class = gcd(r, m) != 1;  // only p = gcd(a, m) can qualify
  if (!finite_class && !(sigma > 1.0)) {
    throw std::domain_error("progression_euler_product: s * exponent must exceed 1");
  }
  const auto table = PrimeTable::at_least(prime_limit);
  // Smallest terms first; each addition may still round, hence the allowance.
  const auto primes = table->up_to(prime_limit);
  double log_sum = 0.0;
  std::uint64_t terms = 0;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    if (*it % m != r) continue;
    log_sum += std::log1p(-std::pow(static_cast<double>(*it), -sigma));
    ++terms;
  }
  EulerProductResult out;
  out.value = std::exp(log_sum);
  const double rounding =
      out.value * std::numeric_limits<double>::epsilon() * (static_cast<double>(terms) * std::abs(log_sum) + 2.0);
  out.method = ProductMethod::truncated;
  out.prime_limit = prime_limit;
  if (finite_class) {
    out.tail_bound = (prime_limit >= m) ? rounding : out.value;
    return out;
  }
  // First member of the class beyond the limit.
  std::uint64_t first = prime_limit + 1;
  first += (r + m - first % m) % m;
  const double tail = class_power_sum_bound(m, first, sigma) /
                      (1.0 - std::pow(static_cast<double>(first), -sigma));
  out.tail_bound = -out.value * std::expm1(-tail) + rounding;
  return out;
}

EulerProductResult accelerated_class_product(std::uint64_t m, double s, double tolerance) {
  if (euler_totient(m) != 2) throw std::invalid_argument("accelerated_class_product: need phi(m) = 2");
  if (!(s >= 2.0)) throw std::domain_error("accelerated_class_product: s must be >= 2");
  if (!(tolerance > 0.0)) throw std::invalid_argument("accelerated_class_product: tolerance must be positive");
  DirichletCharacter chi = characters_mod(m).back();
  const auto divisors = factorize(m);
  std::uint64_t least = m - 1;  // least prime = -1 mod m
  while (!is_prime(least)) least += m;

  double log_b = 0.0;
  double weight = 0.5;
  double t = s;
  double remainder = 0.0;
  for (int j = 0; j < 64; ++j) {
    double log_k = std::log(dirichlet_L(chi, t).real()) - std::log(zeta_real(t));
    for (const auto& f : divisors.factors()) {
      log_k -= std::log1p(-std::pow(static_cast<double>(f.prime), -t));
    }
    log_b += weight * log_k;
    t *= 2.0;
    // What is left is weight * log B(t), and
    // |log B(t)| <= sum_{p = -1 mod m} p^{-t} / (1 - p^{-t}).
    const double tail = class_power_sum_bound(m, least, t) / (1.0 - std::pow(double(least), -t));
    remainder = weight * tail;
    if (remainder < 0.25 * tolerance) break;
    weight *= 0.5;
  }
  EulerProductResult out;
  out.value = std::exp(log_b);
  out.method = ProductMethod::accelerated;
  out.tolerance = tolerance;
  // Dropped factor plus accumulated rounding in the L and zeta evaluations.
  out.tail_bound = out.value * (std::expm1(remainder) + 1e-14);
  return out;
}

EulerProductResult p2(double tolerance) {
  if (tolerance < 1e-12) throw std::invalid_argument("p2: tolerance must be >= 1e-12");
  return accelerated_class_product(3, 2.0, tolerance);
}

}  // namespace cubeperm
