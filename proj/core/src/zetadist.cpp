#include "cubeperm/zetadist.hpp"

#include <cmath>
#include <json.hpp>
#include <limits>
#include <stdexcept>

#include "cubeperm/asymptotics.hpp"
#include "cubeperm/special_functions.hpp"

namespace cubeperm {

namespace {

constexpr double kTwoTo63 = 9223372036854775808.0;

unsigned valuation_of(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

ZetaSampler::ZetaSampler(double s, std::uint64_t seed)
    : s_(s), seed_(seed), b_(std::exp2(s - 1.0)), bits_(seed) {
  if (!(s > 1.0)) throw std::domain_error("ZetaSampler: s must exceed 1");
}

double ZetaSampler::uniform() {
  return static_cast<double>((bits_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t ZetaSampler::operator()() {
  const double inv = -1.0 / (s_ - 1.0);
  for (;;) {
    const double u = uniform();
    const double v = uniform();
    const double x = std::floor(std::pow(u, inv));
    if (!(x < kTwoTo63)) continue;
    const double t = std::pow(1.0 + 1.0 / x, s_ - 1.0);
    if (v * x * (t - 1.0) / (b_ - 1.0) <= t / b_) return static_cast<std::uint64_t>(x);
  }
}

double binomial_z(double frequency, double expected, std::uint64_t samples) {
  const double var = expected * (1.0 - expected) / static_cast<double>(samples);
  const double diff = frequency - expected;
  if (var <= 0.0) {
    if (diff == 0.0) return 0.0;
    return diff > 0 ? std::numeric_limits<double>::max() : std::numeric_limits<double>::lowest();
  }
  return diff / std::sqrt(var);
}

SampleReport make_report(std::string name, std::uint64_t hits, std::uint64_t samples, double expected) {
  SampleReport r;
  r.name = std::move(name);
  r.sample_count = samples;
  r.frequency = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
  r.expected = expected;
  r.z_score = binomial_z(r.frequency, expected, samples);
  return r;
}

std::string to_json(const SampleReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["value"] = r.frequency;
  j["method"] = "sampled";
  j["tolerance_or_prime_limit"] = 4.0;
  j["tail_bound"] = 4.0 * std::sqrt(r.expected * (1.0 - r.expected) / static_cast<double>(r.sample_count));
  j["sample_count"] = r.sample_count;
  j["expected"] = r.expected;
  j["z_score"] = r.z_score;
  return j.dump();
}

SampleReport divisibility_test(ZetaSampler& sampler, std::uint64_t d, std::uint64_t n_samples) {
  if (d == 0) throw std::invalid_argument("divisibility_test: d must be positive");
  if (n_samples < 10'000) throw std::invalid_argument("divisibility_test: need at least 10^4 samples");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) hits += (sampler() % d == 0);
  return make_report("divides:" + std::to_string(d), hits, n_samples,
                     std::pow(static_cast<double>(d), -sampler.s()));
}

SampleReport pmf_test(ZetaSampler& sampler, std::uint64_t k, std::uint64_t n_samples) {
  if (k == 0) throw std::invalid_argument("pmf_test: k must be positive");
  if (n_samples == 0) throw std::invalid_argument("pmf_test: need samples");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) hits += (sampler() == k);
  return make_report("pmf:" + std::to_string(k), hits, n_samples,
                     std::pow(static_cast<double>(k), -sampler.s()) / zeta_real(sampler.s()));
}

std::vector<SampleReport> valuation_independence_test(ZetaSampler& sampler,
                                                      std::span<const std::uint64_t> primes,
                                                      std::span<const unsigned> thresholds,
                                                      std::uint64_t n_samples) {
  if (primes.size() != thresholds.size()) {
    throw std::invalid_argument("valuation_independence_test: one threshold per prime");
  }
  if (n_samples == 0) throw std::invalid_argument("valuation_independence_test: need samples");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw std::invalid_argument("valuation_independence_test: not a prime");
    for (std::size_t j = 0; j < i; ++j) {
      if (primes[i] == primes[j]) throw std::invalid_argument("valuation_independence_test: duplicate prime");
    }
  }
  const double s = sampler.s();
  double expected_joint = 1.0;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    expected_joint *= std::pow(static_cast<double>(primes[j]), -s * thresholds[j]);
  }
  if (expected_joint * static_cast<double>(n_samples) < 10.0) {
    throw std::invalid_argument("valuation_independence_test: joint event too rare for the sample size");
  }
  std::uint64_t joint = 0;
  std::vector<std::uint64_t> exact(primes.size(), 0);
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const std::uint64_t k = sampler();
    bool all = true;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const unsigned v = valuation_of(k, primes[j]);
      all = all && v >= thresholds[j];
      exact[j] += (v == thresholds[j]);
    }
    joint += all;
  }
  std::vector<SampleReport> out;
  std::string joint_name = "valuations";
  for (std::size_t j = 0; j < primes.size(); ++j) {
    joint_name += ":" + std::to_string(primes[j]) + "^" + std::to_string(thresholds[j]);
  }
  out.push_back(make_report(joint_name, joint, n_samples, expected_joint));
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const double p = static_cast<double>(primes[j]);
    const double expected = -std::expm1(-s * std::log(p)) * std::pow(p, -s * thresholds[j]);
    out.push_back(make_report("marginal:" + std::to_string(primes[j]) + "=" + std::to_string(thresholds[j]),
                              exact[j], n_samples, expected));
  }
  return out;
}

SampleReport membership_frequency_test(ZetaSampler& sampler, const CongruenceSelector& sel,
                                       std::uint64_t n_samples) {
  if (n_samples < 100'000) {
    throw std::invalid_argument("membership_frequency_test: need at least 10^5 samples");
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) hits += is_member(sampler(), sel);
  std::string name = "member:m=" + std::to_string(sel.modulus()) + ":A=";
  for (std::size_t i = 0; i < sel.forbidden().size(); ++i) {
    name += (i ? "," : "") + std::to_string(sel.forbidden()[i]);
  }
  if (sel.squarefree_only()) name += ":squarefree";
  return make_report(std::move(name), hits, n_samples, zeta_measure(sel, sampler.s()).value);
}

}  // namespace cubeperm
