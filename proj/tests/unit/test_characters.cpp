#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <numbers>

#include "cubeperm/arith.hpp"
#include "cubeperm/characters.hpp"
#include "cubeperm/special_functions.hpp"

using namespace cubeperm;

TEST_CASE("characters mod 3 and 4") {
  const auto chi = chi_mod3();
  CHECK(chi(1) == std::complex<double>(1, 0));
  CHECK(chi(2) == std::complex<double>(-1, 0));
  CHECK(chi(3) == std::complex<double>(0, 0));
  CHECK(chi.real());
  CHECK_FALSE(chi.principal());
  CHECK(chi_mod4()(3) == std::complex<double>(-1, 0));
  const auto all = characters_mod(3);
  REQUIRE(all.size() == 2);
  CHECK(all[0].principal());
  CHECK(all[1] == chi);
}

TEST_CASE("orthogonality and multiplicativity for m <= 50") {
  for (std::uint64_t m = 1; m <= 50; ++m) {
    const auto chars = characters_mod(m);
    const std::uint64_t phi = euler_totient(m);
    REQUIRE(chars.size() == phi);
    REQUIRE(chars[0].principal());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        std::complex<double> sum = 0;
        for (std::uint64_t r = 0; r < m; ++r) sum += chars[i](r) * std::conj(chars[j](r));
        REQUIRE(std::abs(sum - (i == j ? double(phi) : 0.0)) < 1e-9);
      }
      for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b)
          REQUIRE(std::abs(chars[i](a * b) - chars[i](a) * chars[i](b)) < 1e-12);
    }
    // second orthogonality relation over residues
    for (std::uint64_t a = 0; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      for (std::uint64_t b = 0; b < m; ++b) {
        std::complex<double> sum = 0;
        for (const auto& chi : chars) sum += chi(a) * std::conj(chi(b));
        REQUIRE(std::abs(sum - ((a == b % m) ? double(phi) : 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("L(chi, s) against direct summation") {
  // Direct sum over blocks of 3; the tail after N blocks is below 1/(9 N^2).
  double direct = 0.0;
  for (int n = 2000000; n >= 0; --n) direct += 1.0 / ((3.0 * n + 1) * (3.0 * n + 1)) - 1.0 / ((3.0 * n + 2) * (3.0 * n + 2));
  const auto L = dirichlet_L(chi_mod3(), 2.0);
  CHECK(std::abs(L.imag()) < 1e-15);
  CHECK(std::abs(L.real() - direct) < 1e-12);
  CHECK(std::abs(L.real() - 0.781302412896486) < 1e-13);
  // Catalan's constant
  CHECK(std::abs(dirichlet_L(chi_mod4(), 2.0).real() - 0.915965594177219) < 1e-13);
  // principal character: zeta(s) prod_{p | m} (1 - p^{-s})
  CHECK(std::abs(dirichlet_L(characters_mod(6)[0], 3.0).real() - zeta_real(3) * (1 - 1.0 / 8) * (1 - 1.0 / 27)) < 1e-13);
}

TEST_CASE("L(chi, s) matches its Euler product for complex characters") {
  for (std::uint64_t m : {5, 7, 9}) {
    for (const auto& chi : characters_mod(m)) {
      std::complex<double> product = 1;
      for (std::uint64_t p = 2; p < 200000; ++p) {
        if (!is_prime(p)) continue;
        product /= 1.0 - chi(p) * std::pow(double(p), -3.0);
      }
      CHECK(std::abs(dirichlet_L(chi, 3.0) - product) < 1e-10);
    }
  }
}
