#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubeperm/arith.hpp"
#include "cubeperm/count_table.hpp"

namespace cubeperm::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct VerifyReport {
  std::uint64_t limit = 0;
  std::uint64_t members = 0;
  std::optional<std::uint64_t> counterexample;
  std::vector<std::uint64_t> listed;  // members, kept only for small limits
};

/// Brute-force cube bijection against the membership predicate for W.
VerifyReport verify_cube_characterization(std::uint64_t limit);

struct FitPoint {
  std::uint64_t n;
  std::uint64_t count;
  double r;
};

struct FitResult {
  double exponent = 0.0;  // l / phi(m); NaN for degenerate selectors
  std::vector<FitPoint> points;
  double estimate = 0.0;  // c in r(n) = c + d / log n
  double slope = 0.0;     // d
};

/// r(n) = count (log n)^{l/phi(m)} / n at each checkpoint and the limit of
/// the two-point fit r(n) = c + d / log n through the last two checkpoints
/// with n >= 100. Degenerate selectors use r(n) = count / simplex volume.
FitResult fit_count_table(const CountTable& table);

/// Splits "C,b,c_a(3,1)" on commas outside parentheses.
std::vector<std::string> split_names(const std::string& list);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeperm::cli
