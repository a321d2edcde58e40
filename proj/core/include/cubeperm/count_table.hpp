#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubeperm/arith.hpp"

namespace cubeperm {

struct Checkpoint {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::optional<double> predicted;
  std::optional<double> ratio;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Exact counts |S ∩ [1, n]| at increasing limits n, optionally paired with
/// a predicted value and count/predicted.
struct CountTable {
  CongruenceSelector selector;
  std::vector<Checkpoint> checkpoints;

  /// n strictly increasing and counts non-decreasing.
  bool well_formed() const;

  /// Header `n,count,predicted,ratio`, LF endings, shortest round-trip
  /// decimal form for reals; empty field when a value is absent.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;

  /// Parses what write_csv emits. The CSV carries no selector, so the
  /// caller supplies it. Throws std::runtime_error on malformed input.
  static CountTable read_csv(std::istream& in, const CongruenceSelector& selector);
};

std::string format_real(double x);

}  // namespace cubeperm
