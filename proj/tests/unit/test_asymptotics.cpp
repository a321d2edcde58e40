#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cubeperm/asymptotics.hpp"
#include "cubeperm/characters.hpp"
#include "cubeperm/sieve.hpp"
#include "cubeperm/special_functions.hpp"

using namespace cubeperm;

namespace {

constexpr double kPi = std::numbers::pi;

double closed_form_c1() { return std::pow(3.0, 1.25) / std::sqrt(2 * kPi * p2().value); }

}  // namespace

TEST_CASE("L_chi1(1)") {
  CHECK(std::abs(3 * std::numbers::sqrt3 * L_chi1_exact() - kPi) < 1e-15);
  // Alternating blocks: the tail after N blocks is 1/(9N) + O(N^-2), so
  // 2 S(2N) - S(N) removes the leading term.
  auto partial = [](int blocks) {
    double s = 0.0;
    for (int n = blocks - 1; n >= 0; --n) s += 1.0 / (3.0 * n + 1) - 1.0 / (3.0 * n + 2);
    return s;
  };
  const double extrapolated = 2 * partial(2000000) - partial(1000000);
  CHECK(std::abs(extrapolated - L_chi1_exact()) < 1e-8);
  const auto summed = L_chi1_summed();
  CHECK(std::abs(summed.value - L_chi1_exact()) < 1e-12);
  CHECK(summed.tail_bound < 1e-10);
}

TEST_CASE("constant C") {
  const auto c = constant_C();
  CHECK(std::abs(c.value - 0.664) <= 0.0005);
  CHECK(std::abs(c.value - 0.664277561) < 1e-8);
  CHECK(c.method == ProductMethod::closed_form);
  EulerProductResult one;
  one.value = 1.0;
  CHECK(std::abs(constant_C_from(one).value - 0.790) < 5e-4);
  const auto truncated = constant_C_from(progression_euler_product(3, 2, 1, 2, kDefaultPrimeLimit));
  CHECK(std::abs(c.value - truncated.value) <= c.tail_bound + truncated.tail_bound);
}

TEST_CASE("Landau-Ramanujan constant") {
  const auto b = landau_ramanujan_b();
  CHECK(std::abs(b.value - 0.764) <= 0.001);
  CHECK(std::abs(b.value - 0.7642236535892206) < 1e-9);
  const auto truncated = landau_ramanujan_b_from(progression_euler_product(4, 3, 1, 2, kDefaultPrimeLimit));
  CHECK(std::abs(b.value - truncated.value) <= b.tail_bound + truncated.tail_bound);
  CHECK(std::abs(b.value - truncated.value) <= 1e-6);
}

TEST_CASE("c_a for m = 3 against the closed form") {
  const auto c1 = c_a_estimate(3, 1);
  CHECK(c1.method == ProductMethod::extrapolated);
  CHECK(std::abs(c1.value - closed_form_c1()) < 1e-3);
  CHECK(std::abs(c1.value - closed_form_c1()) <= std::max(c1.tail_bound, 1e-4));
  // Dividing by Gamma(1/2) gives the normalization 1.0567.
  CHECK(std::abs(c1.value / std::sqrt(kPi) - 1.0567) < 1e-3);
}

TEST_CASE("c_a products reproduce Mertens") {
  // zeta(s) prod_p (1 - p^{-s}) = 1, so prod_a c_a prod_{p | m} (1 - 1/p) = 1.
  for (std::uint64_t m : {3, 4, 5, 8}) {
    double product = 1.0;
    for (std::uint64_t a = 1; a <= m; ++a) product *= c_a_estimate(m, a).value;
    CHECK(std::abs(product - 1.0) < 2e-3);
  }
}

TEST_CASE("Mertens-type limit at s = 1.001 by direct evaluation") {
  // Products over primes to X with the omitted primes restored through the
  // prime number theorem: sum_{p > X} p^{-s} ~ int_X^inf t^{-s} / log t dt.
  const double s = 1.001;
  const std::uint64_t X = 10000000;
  double log_product = 0.0;
  std::vector<bool> composite(X + 1);
  for (std::uint64_t p = 2; p <= X; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p * p; j <= X; j += p) composite[j] = true;
    log_product += std::log1p(-std::pow(double(p), -s));
  }
  const double tail = std::expint(-(s - 1) * std::log(double(X))) * -1.0;
  CHECK(std::abs(zeta_real(s) * std::exp(log_product - tail) - 1.0) < 1e-2);
}

TEST_CASE("c_a for residues sharing a factor with the modulus") {
  CHECK(c_a_estimate(3, 3).value == doctest::Approx(2.0 / 3));
  CHECK(c_a_estimate(3, 0).value == doctest::Approx(2.0 / 3));
  CHECK(c_a_estimate(4, 2).value == doctest::Approx(0.5));
  CHECK(c_a_estimate(6, 4).value == 1.0);
  CHECK(c_a_estimate(9, 6).value == 1.0);
}

TEST_CASE("delange leading term") {
  CHECK(std::abs(delange_leading_term({1.0, 1.0, ""}, std::numbers::e) - std::numbers::e) < 1e-12);
  CHECK(std::abs(delange_leading_term({0.5, std::sqrt(kPi), ""}, std::numbers::e) - std::numbers::e) < 1e-12);
  CHECK_THROWS(delange_leading_term({0.5, 1.0, ""}, 1.0));
}

TEST_CASE("predicted counts") {
  const auto w = CongruenceSelector::cube_bijective();
  const auto v = CongruenceSelector::no_one_mod_three();
  const auto q = CongruenceSelector::squarefree();
  const double n = 1e8;
  const double c = constant_C().value;
  CHECK(std::abs(predicted_count(w, n) / (c * n / std::sqrt(std::log(n))) - 1) < 1e-3);
  CHECK(std::abs(predicted_count(w, n) - 1.548e7) < 1e4);
  const double sf = (8.0 / 9) * p2().value;
  CHECK(std::abs(sf - 0.6286) < 1e-4);
  for (double x : {1e3, 1e6, 1e9}) CHECK(std::abs(predicted_count(v, x) / predicted_count(w, x) - 1 / sf) < 1e-6);
  CHECK(std::abs(predicted_count(q, 1e6) - 6e6 / (kPi * kPi)) < 1e-6);
  const auto table = count_members(q, 1000000, std::vector<std::uint64_t>{1000000});
  CHECK(std::abs(table.checkpoints[0].count / predicted_count(q, 1e6) - 1) < 1e-3);
  CHECK_THROWS_AS(predicted_count(CongruenceSelector(2, {1}, false), 100.0), std::domain_error);
  CHECK_THROWS(predicted_count(w, 2.0));
}

TEST_CASE("asymptotic law") {
  const auto law = asymptotic_law(CongruenceSelector::cube_bijective());
  CHECK(law.rho == 0.5);
  CHECK(std::abs(law.a1 / gamma_lanczos(0.5) - constant_C().value) < 1e-3);
  CHECK(asymptotic_law(CongruenceSelector(5, {2, 3}, false)).rho == 0.5);
  CHECK(asymptotic_law(CongruenceSelector(7, {1, 2, 4}, false)).rho == 0.5);
}

TEST_CASE("zeta measures") {
  CHECK(std::abs(zeta_measure(CongruenceSelector::no_one_mod_three(), 2).value - 0.96710) < 1e-5);
  CHECK(std::abs(zeta_measure(CongruenceSelector::squarefree(), 2).value - 90 / std::pow(kPi, 4)) < 1e-9);
  CHECK(zeta_measure(CongruenceSelector(1, {}, false), 2).value == 1.0);
  // W at s = 2: prod_{p = 1 (3)} (1 - p^-2) prod_{p != 1 (3)} (1 - p^-4)
  const double w = zeta_measure(CongruenceSelector::cube_bijective(), 2).value;
  const double oracle = progression_euler_product(3, 1, 2, 1, 10000000).value *
                        progression_euler_product(3, 2, 2, 2, 10000000).value * (1 - std::pow(3.0, -4));
  CHECK(std::abs(w - oracle) < 1e-8);
}

TEST_CASE("factorization identity for V against direct summation") {
  const std::uint64_t N = 2000000;
  const auto members = enumerate_members(CongruenceSelector::no_one_mod_three(), N);
  for (double s : {1.5, 2.0, 2.5, 3.0}) {
    double direct = 0.0;
    for (auto it = members.rbegin(); it != members.rend(); ++it) direct += std::pow(double(*it), -s);
    const double L = dirichlet_L(chi_mod3(), s).real();
    const double formula = std::sqrt(zeta_real(s) / L / (1 - std::pow(3.0, -s)) /
                                     accelerated_class_product(3, 2 * s, 1e-13).value);
    const double truncation = std::pow(double(N), 1 - s) / (s - 1);
    CHECK(formula - direct >= -1e-12);
    CHECK(formula - direct <= truncation);
  }
}

TEST_CASE("W and V series differ by the square-free factor at s = 2") {
  const std::uint64_t N = 2000000;
  double sum_w = 0.0, sum_v = 0.0;
  const auto v = enumerate_members(CongruenceSelector::no_one_mod_three(), N);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const double t = 1.0 / (double(*it) * double(*it));
    sum_v += t;
    if (is_squarefree(*it)) sum_w += t;
  }
  const double factor = (1 - std::pow(3.0, -4)) * accelerated_class_product(3, 4.0, 1e-13).value;
  CHECK(std::abs(sum_w - sum_v * factor) < 2.0 / double(N));
}

TEST_CASE("attach predictions") {
  auto table = count_members(CongruenceSelector::cube_bijective(), 100000, decades(100000));
  CHECK(attach_predictions(table));
  for (const auto& c : table.checkpoints) {
    REQUIRE(c.predicted.has_value());
    CHECK(*c.ratio == doctest::Approx(double(c.count) / *c.predicted));
  }
  auto degenerate = count_members(CongruenceSelector(2, {1}, false), 1024, std::vector<std::uint64_t>{1024});
  CHECK(attach_predictions(degenerate));
  CHECK(*degenerate.checkpoints[0].ratio == doctest::Approx(1.1));
  auto finite = count_members(CongruenceSelector(3, {1, 2}, true), 100, std::vector<std::uint64_t>{100});
  CHECK_FALSE(attach_predictions(finite));
  CHECK_FALSE(finite.checkpoints[0].predicted.has_value());
}
