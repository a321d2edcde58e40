#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cubeperm/arith.hpp"

namespace cubeperm {

/// Draws K with P(K = k) = k^{-s} / zeta(s).
///
/// Devroye's rejection method on the envelope floor(U^{-1/(s-1)}). The bit
/// source is std::mt19937_64, whose output sequence is fixed by the C++
/// standard; uniforms are (x >> 11 + 1) * 2^-53 in (0, 1], so streams are
/// identical on every platform. Draws that would exceed 2^63 are rejected,
/// i.e. the law is conditioned on K < 2^63 (mass 2^{-63(s-1)}).
class ZetaSampler {
 public:
  ZetaSampler(double s, std::uint64_t seed);

  double s() const { return s_; }
  std::uint64_t seed() const { return seed_; }

  std::uint64_t operator()();
  double uniform();

 private:
  double s_;
  std::uint64_t seed_;
  double b_;  // 2^{s-1}
  std::mt19937_64 bits_;
};

/// Observed frequency of an event against its exact probability.
struct SampleReport {
  std::string name;
  std::uint64_t sample_count = 0;
  double frequency = 0.0;
  double expected = 0.0;
  double z_score = 0.0;
};

/// Binomial z-score; 0 when expected is 0 or 1 and the frequency matches.
double binomial_z(double frequency, double expected, std::uint64_t samples);
SampleReport make_report(std::string name, std::uint64_t hits, std::uint64_t samples, double expected);

/// JSON line: {"name","value","method","tolerance_or_prime_limit","tail_bound",
/// "sample_count","expected","z_score"}; value is the observed frequency.
std::string to_json(const SampleReport& r);

/// P(d | K) = d^{-s}.
SampleReport divisibility_test(ZetaSampler& sampler, std::uint64_t d, std::uint64_t n_samples);

/// P(K = k) = k^{-s} / zeta(s).
SampleReport pmf_test(ZetaSampler& sampler, std::uint64_t k, std::uint64_t n_samples);

/// First report: joint event nu_p(K) >= a_p for all p, expected prod p^{-s a_p}.
/// Then one marginal per prime: P(nu_p(K) = a_p) = (1 - p^{-s}) p^{-s a_p}.
/// All reports come from the same n_samples draws.
std::vector<SampleReport> valuation_independence_test(ZetaSampler& sampler,
                                                      std::span<const std::uint64_t> primes,
                                                      std::span<const unsigned> thresholds,
                                                      std::uint64_t n_samples);

/// Frequency of membership against the Euler product for the selected set.
SampleReport membership_frequency_test(ZetaSampler& sampler, const CongruenceSelector& sel,
                                       std::uint64_t n_samples);

}  // namespace cubeperm
