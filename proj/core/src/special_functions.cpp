#include "cubeperm/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubeperm {

namespace {

// B_{2j} / (2j)!, j = 1..10
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
};

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: s must exceed 1");
  if (!(q > 0.0)) throw std::domain_error("hurwitz_zeta: q must be positive");
  constexpr int kShift = 16;
  double head = 0.0;
  for (int k = kShift - 1; k >= 0; --k) head += std::pow(k + q, -s);
  const double a = kShift + q;
  double tail = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  // term_j = s(s+1)...(s+2j-2) a^{-s-2j+1}
  double term = s * std::pow(a, -s - 1.0);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double add = kBernoulliOverFactorial[j] * term;
    tail += add;
    if (std::abs(add) < 1e-18 * std::abs(tail)) break;
    const double k = 2.0 * static_cast<double>(j + 1);
    term *= (s + k - 1.0) * (s + k) / (a * a);
  }
  return head + tail;
}

double zeta_real(double s) {
  if (!(s > 1.0)) throw std::domain_error("zeta_real: s must exceed 1");
  return hurwitz_zeta(s, 1.0);
}

double gamma_lanczos(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw std::domain_error("gamma_lanczos: pole at non-positive integer");
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_lanczos(1.0 - x));
  }
  constexpr double g = 7.0;
  x -= 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double exponential_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exponential_integral_e1: x must be positive");
  return -std::expint(-x);
}

}  // namespace cubeperm
