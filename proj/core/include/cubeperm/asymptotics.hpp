#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cubeperm/arith.hpp"
#include "cubeperm/count_table.hpp"
#include "cubeperm/euler_product.hpp"

namespace cubeperm {

/// Prime limit used by every truncated product in this module.
inline constexpr std::uint64_t kDefaultPrimeLimit = 10'000'000;

/// pi / (3 sqrt 3).
double L_chi1_exact();

/// sum_{n>=0} 1/(3n+1) - 1/(3n+2), summed to 1000 blocks with an
/// Euler-Maclaurin tail.
EulerProductResult L_chi1_summed();

/// (4/pi) 3^{-3/4} sqrt(2 p2).
EulerProductResult constant_C(double tolerance = 1e-12);
EulerProductResult constant_C_from(const EulerProductResult& p2_value);

/// Landau-Ramanujan constant (1/sqrt 2) prod_{p = 3 mod 4} (1 - p^{-2})^{-1/2}.
EulerProductResult landau_ramanujan_b(double tolerance = 1e-10);
EulerProductResult landau_ramanujan_b_from(const EulerProductResult& class_product);

/// Carries the best value found when the extrapolation misses its target.
class EstimationFailure : public std::runtime_error {
 public:
  EstimationFailure(const std::string& what, double best, double error)
      : std::runtime_error(what), best_(best), error_(error) {}
  double best() const { return best_; }
  double error() const { return error_; }

 private:
  double best_;
  double error_;
};

/// c_a = lim_{s->1+} zeta(s)^{1/phi(m)} prod_{p = a mod m} (1 - p^{-s}).
///
/// For a coprime to m the limit is taken numerically: on s_j = 1 + 2^{-j},
/// j = 3..12, the product is truncated at 10^7, the missing primes are
/// restored through the tail estimate E_1((s-1) log X) / phi(m), and the
/// values are Richardson-extrapolated (order 2) to s = 1. For a not coprime
/// to m, c_a is 1 - 1/a when a is prime and 1 otherwise. Results are cached.
EulerProductResult c_a_estimate(std::uint64_t m, std::uint64_t a, double tolerance = 1e-3);

/// prod_{p not in A + mZ} (1 - p^{-2}) = zeta(2)^{-1} / prod_{p in A + mZ} (1 - p^{-2}).
EulerProductResult squarefree_factor(const CongruenceSelector& sel);

/// Probability that a zeta(s)-distributed integer lies in the selected set:
/// prod_{p in A + mZ} (1 - p^{-s}), times prod_{p not in A + mZ} (1 - p^{-2s})
/// when square-free members are required.
EulerProductResult zeta_measure(const CongruenceSelector& sel, double s);

/// Dirichlet series of the set behaves like a1 (s-1)^{-rho} at s = 1.
struct AsymptoticLaw {
  double rho = 1.0;
  double a1 = 1.0;
  std::string description;
};

/// a1 / Gamma(rho) * x (log x)^{rho - 1}.
double delange_leading_term(const AsymptoticLaw& law, double x);

/// rho = 1 - l/phi(m), a1 = (prod_{a in A} c_a) times the square-free factor
/// if requested. Throws std::domain_error for degenerate selectors.
AsymptoticLaw asymptotic_law(const CongruenceSelector& sel);

/// Leading-order count of members up to n (n > e, non-degenerate).
double predicted_count(const CongruenceSelector& sel, double n);

/// Fills predicted and ratio for every checkpoint that admits a prediction:
/// the Delange term for l < phi(m), the simplex volume for degenerate
/// selectors with infinitely many members. Returns false when the selector
/// describes a finite set and no prediction applies.
bool attach_predictions(CountTable& table);

}  // namespace cubeperm
