#include "cubeperm/asymptotics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "cubeperm/sieve.hpp"
#include "cubeperm/special_functions.hpp"

namespace cubeperm {

namespace {

constexpr int kFirstGridExponent = 3;
constexpr int kLastGridExponent = 12;

// Tail-corrected F(s) = zeta(s)^{1/phi} prod_{p <= X, p = a} (1 - p^{-s}) exp(-tail).
double tail_corrected_mertens(std::uint64_t m, std::uint64_t a, std::uint64_t phi, double s,
                              std::uint64_t prime_limit) {
  const auto partial = progression_euler_product(m, a, s, 1, prime_limit);
  const double inv_phi = 1.0 / static_cast<double>(phi);
  const double tail = exponential_integral_e1((s - 1.0) * std::log(double(prime_limit))) * inv_phi;
  return std::exp(inv_phi * std::log(zeta_real(s)) + std::log(partial.value) - tail);
}

EulerProductResult coprime_c_a(std::uint64_t m, std::uint64_t a, double tolerance) {
  const std::uint64_t phi = euler_totient(m);
  constexpr int kPoints = kLastGridExponent - kFirstGridExponent + 1;
  std::array<double, kPoints> f{};
  for (int j = kFirstGridExponent; j <= kLastGridExponent; ++j) {
    f[j - kFirstGridExponent] = tail_corrected_mertens(m, a, phi, 1.0 + std::ldexp(1.0, -j), kDefaultPrimeLimit);
  }
  // Richardson in h = s - 1 with halving steps, using the three finest points.
  const double f0 = f[kPoints - 1], f1 = f[kPoints - 2], f2 = f[kPoints - 3];
  const double r1_fine = 2.0 * f0 - f1;
  const double r1_coarse = 2.0 * f1 - f2;
  const double r2 = (4.0 * r1_fine - r1_coarse) / 3.0;
  // Extrapolation spread plus an allowance of X^{-1/2} (relative) for the
  // gap between the primes in the class beyond X and the li(X)/phi(m) model.
  const double error = std::abs(r2 - r1_fine) + std::abs(r2) / std::sqrt(double(kDefaultPrimeLimit));

  EulerProductResult out;
  out.value = r2;
  out.method = ProductMethod::extrapolated;
  out.tolerance = std::max(tolerance, 1e-3);
  out.tail_bound = error;
  if (!(error <= *out.tolerance) || !std::isfinite(r2)) {
    throw EstimationFailure("c_a(" + std::to_string(m) + "," + std::to_string(a) +
                                "): extrapolation did not reach the target accuracy",
                            r2, error);
  }
  return out;
}

}  // namespace

double L_chi1_exact() { return std::numbers::pi / (3.0 * std::numbers::sqrt3); }

EulerProductResult L_chi1_summed() {
  // f(x) = 1/(3x+1) - 1/(3x+2); f^{(k)}(x) = (-1)^k k! 3^k ((3x+1)^{-k-1} - (3x+2)^{-k-1}).
  constexpr int kBlocks = 1000;
  auto derivative = [](int k, double x) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * std::tgamma(k + 1.0) * std::pow(3.0, k) *
           (std::pow(3.0 * x + 1.0, -k - 1.0) - std::pow(3.0 * x + 2.0, -k - 1.0));
  };
  double sum = 0.0;
  for (int n = kBlocks - 1; n >= 0; --n) sum += 1.0 / (3.0 * n + 1.0) - 1.0 / (3.0 * n + 2.0);
  const double N = kBlocks;
  double tail = std::log((3.0 * N + 2.0) / (3.0 * N + 1.0)) / 3.0 + 0.5 * derivative(0, N);
  // - sum_j B_{2j}/(2j)! f^{(2j-1)}(N)
  constexpr std::array<double, 4> bernoulli = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
  double last = 0.0;
  for (std::size_t j = 0; j < bernoulli.size(); ++j) {
    last = -bernoulli[j] * derivative(2 * static_cast<int>(j) + 1, N);
    tail += last;
  }
  EulerProductResult out;
  out.value = sum + tail;
  out.method = ProductMethod::extrapolated;
  out.prime_limit = std::nullopt;
  out.tolerance = 1e-12;
  out.tail_bound = std::abs(last) + 1e-15 * kBlocks;
  return out;
}

EulerProductResult constant_C_from(const EulerProductResult& p2_value) {
  const double scale = 4.0 / std::numbers::pi * std::pow(3.0, -0.75) * std::sqrt(2.0);
  EulerProductResult out = p2_value;
  out.value = scale * std::sqrt(p2_value.value);
  out.method = ProductMethod::closed_form;
  // d sqrt(x) = dx / (2 sqrt x)
  out.tail_bound = scale * p2_value.tail_bound / (2.0 * std::sqrt(p2_value.value));
  return out;
}

EulerProductResult constant_C(double tolerance) { return constant_C_from(p2(tolerance)); }

EulerProductResult landau_ramanujan_b_from(const EulerProductResult& class_product) {
  EulerProductResult out = class_product;
  out.value = std::numbers::sqrt2 / 2.0 / std::sqrt(class_product.value);
  // d x^{-1/2} = -dx / (2 x^{3/2})
  out.tail_bound = out.value * class_product.tail_bound / (2.0 * class_product.value);
  return out;
}

EulerProductResult landau_ramanujan_b(double tolerance) {
  if (tolerance < 1e-12) throw std::invalid_argument("landau_ramanujan_b: tolerance must be >= 1e-12");
  return landau_ramanujan_b_from(accelerated_class_product(4, 2.0, tolerance));
}

EulerProductResult c_a_estimate(std::uint64_t m, std::uint64_t a, double tolerance) {
  if (m == 0) throw std::invalid_argument("c_a_estimate: m must be >= 1");
  a %= m;
  if (a == 0) a = m;
  if (gcd(a, m) != 1) {
    EulerProductResult out;
    out.value = is_prime(a) ? 1.0 - 1.0 / static_cast<double>(a) : 1.0;
    out.method = ProductMethod::closed_form;
    return out;
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, EulerProductResult> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({m, a}); it != cache.end() && it->second.tail_bound <= std::max(tolerance, 1e-3)) {
      return it->second;
    }
  }
  auto result = coprime_c_a(m, a, tolerance);
  std::lock_guard lock(mu);
  cache.insert_or_assign({m, a}, result);
  return result;
}

EulerProductResult squarefree_factor(const CongruenceSelector& sel) {
  double forbidden = 1.0;
  double forbidden_tail = 0.0;  // relative
  for (std::uint64_t a : sel.forbidden()) {
    const auto part = progression_euler_product(sel.modulus(), a, 2.0, 1, kDefaultPrimeLimit);
    forbidden *= part.value;
    forbidden_tail += part.tail_bound / part.value;
  }
  EulerProductResult out;
  out.value = 1.0 / (zeta_real(2.0) * forbidden);
  out.method = ProductMethod::truncated;
  out.prime_limit = kDefaultPrimeLimit;
  out.tail_bound = out.value * forbidden_tail;
  return out;
}

EulerProductResult zeta_measure(const CongruenceSelector& sel, double s) {
  if (!(s > 1.0)) throw std::domain_error("zeta_measure: s must exceed 1");
  double log_value = 0.0;
  double rel_tail = 0.0;
  for (std::uint64_t a : sel.forbidden()) {
    const auto part = progression_euler_product(sel.modulus(), a, s, 1, kDefaultPrimeLimit);
    log_value += std::log(part.value);
    rel_tail += part.tail_bound / part.value;
    if (sel.squarefree_only()) {
      const auto sq = progression_euler_product(sel.modulus(), a, s, 2, kDefaultPrimeLimit);
      log_value -= std::log(sq.value);
      rel_tail += sq.tail_bound / sq.value;
    }
  }
  if (sel.squarefree_only()) log_value -= std::log(zeta_real(2.0 * s));
  EulerProductResult out;
  out.value = std::exp(log_value);
  out.method = ProductMethod::truncated;
  out.prime_limit = kDefaultPrimeLimit;
  out.tail_bound = out.value * rel_tail;
  return out;
}

double delange_leading_term(const AsymptoticLaw& law, double x) {
  if (!(x > 1.0)) throw std::domain_error("delange_leading_term: x must exceed 1");
  if (law.rho <= 0.0 && law.rho == std::floor(law.rho)) {
    throw std::domain_error("delange_leading_term: rho must not be a non-positive integer");
  }
  return law.a1 / gamma_lanczos(law.rho) * x * std::pow(std::log(x), law.rho - 1.0);
}

AsymptoticLaw asymptotic_law(const CongruenceSelector& sel) {
  if (sel.degenerate()) {
    throw std::domain_error("asymptotic_law: every unit class is forbidden (degenerate case)");
  }
  AsymptoticLaw law;
  law.rho = 1.0 - static_cast<double>(sel.coprime_forbidden_count()) / static_cast<double>(sel.totient());
  double a1 = 1.0;
  for (std::uint64_t a : sel.forbidden()) a1 *= c_a_estimate(sel.modulus(), a).value;
  if (sel.squarefree_only()) a1 *= squarefree_factor(sel).value;
  law.a1 = a1;
  law.description = "m=" + std::to_string(sel.modulus()) + " l=" +
                    std::to_string(sel.coprime_forbidden_count()) + " phi=" + std::to_string(sel.totient()) +
                    (sel.squarefree_only() ? " squarefree" : "");
  return law;
}

double predicted_count(const CongruenceSelector& sel, double n) {
  if (!(n > std::numbers::e)) throw std::domain_error("predicted_count: n must exceed e");
  return delange_leading_term(asymptotic_law(sel), n);
}

bool attach_predictions(CountTable& table) {
  const auto& sel = table.selector;
  if (sel.degenerate()) {
    const PrimeSet allowed(sel.allowed_divisor_primes());
    if (allowed.empty() || sel.squarefree_only()) return false;
    for (auto& c : table.checkpoints) {
      if (c.n < 2) continue;
      c.predicted = degenerate_asymptotic(allowed, static_cast<double>(c.n));
      c.ratio = static_cast<double>(c.count) / *c.predicted;
    }
    return true;
  }
  const auto law = asymptotic_law(sel);
  for (auto& c : table.checkpoints) {
    if (!(static_cast<double>(c.n) > std::numbers::e)) continue;
    c.predicted = delange_leading_term(law, static_cast<double>(c.n));
    c.ratio = static_cast<double>(c.count) / *c.predicted;
  }
  return true;
}

}  // namespace cubeperm
