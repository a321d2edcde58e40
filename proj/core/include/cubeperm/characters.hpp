#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cubeperm {

/// A Dirichlet character mod m stored as exact angles: chi(n) =
/// exp(2 pi i k(n) / phi(m)) for n coprime to m, 0 otherwise.
class DirichletCharacter {
 public:
  static constexpr std::int64_t kNotUnit = -1;

  DirichletCharacter(std::uint64_t modulus, std::uint64_t totient, std::vector<std::int64_t> angles);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t totient() const { return totient_; }

  /// Numerator k of chi(n) = e^{2 pi i k / phi(m)}, or kNotUnit.
  std::int64_t angle(std::uint64_t n) const { return angles_[n % modulus_]; }
  std::complex<double> operator()(std::uint64_t n) const;

  bool principal() const;
  bool real() const;
  DirichletCharacter conjugate() const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  std::uint64_t modulus_;
  std::uint64_t totient_;
  std::vector<std::int64_t> angles_;  // indexed by residue 0..m-1
};

/// All phi(m) characters mod m; the principal character comes first.
std::vector<DirichletCharacter> characters_mod(std::uint64_t m);

/// The character mod 3 with chi(1) = 1, chi(2) = -1.
DirichletCharacter chi_mod3();
/// The character mod 4 with chi(1) = 1, chi(3) = -1.
DirichletCharacter chi_mod4();

/// L(chi, s) = sum chi(n) n^{-s} for real s > 1, evaluated as
/// m^{-s} sum_r chi(r) zeta(s, r/m).
std::complex<double> dirichlet_L(const DirichletCharacter& chi, double s);

}  // namespace cubeperm
