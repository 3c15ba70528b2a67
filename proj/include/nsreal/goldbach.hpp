// The series sum 1/(k-1) over perfect powers k = m^n (m, n >= 2), and the
// stepwise sieve that peels geometric series off the harmonic range.
#pragma once

#include <cstdint>
#include <vector>

#include "nsreal/common.hpp"
#include "nsreal/extsum.hpp"

namespace nsreal::goldbach {

/// Every m^n <= limit with m, n >= 2, sorted, each value once.
std::vector<std::uint64_t> perfect_powers(std::uint64_t limit);

/// Number of perfect powers in [2, x].
std::uint64_t count_perfect_powers(std::uint64_t x);

/// The index-th perfect power, 0-based (4, 8, 9, 16, ...).
std::uint64_t nth_perfect_power(std::uint64_t index);

bool is_perfect_power(std::uint64_t k);

/// Exact sum of 1/(k-1) over perfect powers k <= limit. Requires limit >= 4.
Rational gb_partial_sum(std::uint64_t limit);

/// Certified upper bound on sum of 1/(k-1) over perfect powers k > limit.
Rational tail_bound(std::uint64_t limit);

/// The series 1/3 + 1/7 + 1/8 + 1/15 + ... with its tail bound attached.
extsum::SeriesSpec powers_recip();

struct SieveStep {
  std::uint64_t base;
  Rational contribution;  // 1/(base - 1)
  Rational tail;          // geometric tail of base^i beyond depth
  unsigned exponents;     // powers base^1 .. base^exponents lie in [2, depth]
};

struct SieveReport {
  std::vector<SieveStep> steps;
  std::vector<std::uint64_t> removed_bases;
  /// H(depth) minus contributions minus the still uncovered terms.
  Rational residual;
  /// Contains 1: [residual, residual + sum of tails].
  Interval residual_interval;
  /// Sum of the uncovered terms 1/k, k in [2, depth].
  Rational coverage_gap;
  Rational tail_sum;
  std::uint64_t depth = 0;
};

/// Removes the geometric series of the `steps` smallest non-power bases from
/// {1 .. depth}. Throws kDepthTooSmall when fewer bases fit under depth.
SieveReport euler_sieve(std::uint64_t depth, std::uint64_t steps);

/// Flat sum of powers_recip() inspected over the powers <= limit.
extsum::ExtSumResult gb_flat_identity(std::uint64_t limit);

}  // namespace nsreal::goldbach
