#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cubeperm {

enum class ProductMethod { truncated, accelerated, closed_form, extrapolated };

std::string_view to_string(ProductMethod method);

/// A numerically evaluated constant. tail_bound estimates the absolute
/// error left by truncation or extrapolation.
struct EulerProductResult {
  double value = 0.0;
  ProductMethod method = ProductMethod::truncated;
  std::optional<std::uint64_t> prime_limit;
  std::optional<double> tolerance;
  double tail_bound = 0.0;
};

/// One JSON object on a single line:
/// {"name","value","method","tolerance_or_prime_limit","tail_bound"}.
std::string to_json(std::string_view name, const EulerProductResult& r);

/// Upper bound for sum_{n >= first, n = a mod m} n^{-sigma}, sigma > 1.
double class_power_sum_bound(std::uint64_t m, std::uint64_t first, double sigma);

/// prod_{p <= prime_limit, p = a mod m} (1 - p^{-s k}).
///
/// The tail bound is rigorous: it majorizes the omitted primes by every
/// integer of the class beyond prime_limit. Throws std::domain_error when
/// s k <= 1 and an infinite progression of primes would be involved.
EulerProductResult progression_euler_product(std::uint64_t m, std::uint64_t a, double s,
                                             unsigned exponent_power, std::uint64_t prime_limit);

/// prod_{p = -1 mod m} (1 - p^{-s}) for a modulus with phi(m) = 2, s >= 2.
///
/// With B(s) this product, chi the real character mod m and
/// K(s) = L(chi, s) / (zeta(s) prod_{p | m} (1 - p^{-s})), the Euler
/// products give B(s)^2 = K(s) B(2s); unrolling,
/// log B(s) = sum_j 2^{-(j+1)} log K(2^j s) + 2^{-J} log B(2^J s), and the
/// last term is dropped once it falls below the tolerance.
EulerProductResult accelerated_class_product(std::uint64_t m, double s, double tolerance);

/// prod_{p = 2 mod 3} (1 - p^{-2}).
EulerProductResult p2(double tolerance = 1e-12);

}  // namespace cubeperm
