// External summation of countable rational sequences.
//
// Partial sums give the hyperreal representative; flat sums lift that into
// the Dedekind fragment, where a convergent nonnegative series with sum eta
// becomes eta# - eps_d and a nonpositive one eta# + eps_d.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "nsreal/common.hpp"
#include "nsreal/seqfield.hpp"
#include "nsreal/wattenberg.hpp"

namespace nsreal::extsum {

using seqfield::Hyperreal;
using wattenberg::DedekindNumber;

using TermFn = std::function<Rational(std::size_t)>;
using IndexMap = std::function<std::size_t(std::size_t)>;

enum class SignPattern { kNonNeg, kNonPos, kSplit };

/// Where the strictly positive and the negative terms of a split series live.
/// plus(k) / minus(k) is the original index of the k-th term of each part.
struct SplitIndices {
  IndexMap plus;
  IndexMap minus;
  /// Set for alternating splits: parity of the indices holding positive terms.
  std::optional<int> alternating_phase;

  static SplitIndices alternating(int phase);
};

struct SeriesSpec {
  TermFn term;
  SignPattern sign = SignPattern::kNonNeg;
  std::optional<SplitIndices> split;
  /// Certified bound on sum_{n>k} |term(n)|; empty when convergence is unknown.
  TermFn tail_bound;
  std::string label;

  bool has_tail_bound() const { return static_cast<bool>(tail_bound); }
};

/// Terms first * ratio^n.
SeriesSpec geometric(const Rational& first, const Rational& ratio);
/// Terms r^(n+1).
SeriesSpec geom(const Rational& r);
/// Terms 1/(n+1)^k.
SeriesSpec pser(unsigned k);
/// Terms 1/(n+1); divergent.
SeriesSpec harmonic_series();
/// Terms (-1)^n * term(n).
SeriesSpec alternate(const SeriesSpec& s);
/// Drop-in series from raw parts (sign pattern NonNeg/NonPos only).
SeriesSpec make_series(TermFn term, SignPattern sign, TermFn tail_bound, std::string label);

/// Throws kInvalidArgument if some term in [0, depth] contradicts the pattern
/// or the tail bound increases.
void validate(const SeriesSpec& s, std::size_t depth = kDefaultDepth);

struct ExtSumResult {
  DedekindNumber value;
  std::optional<Interval> eta;
  bool divergent = false;
};

struct FlatSumOptions {
  std::size_t depth = kDefaultDepth;
  /// Partial sums exceeding this in magnitude within depth witness divergence.
  Rational divergence_probe = 8;
  /// Target width for the eta interval (capped by what depth allows).
  Rational tolerance = Rational(1, 1000000);
};

/// Partial-sum hyperreal (s_0, s_0 + s_1, ...); carries the tail bound as its
/// convergence modulus.
Hyperreal ext_sum_hyper(const SeriesSpec& s);

/// Partial sums of the positive and the negative part, each re-indexed over its
/// own terms.
std::pair<Hyperreal, Hyperreal> ext_sum_split(const SeriesSpec& s);

/// Positive / negative sub-series of a split series.
std::pair<SeriesSpec, SeriesSpec> split_parts(const SeriesSpec& s);

ExtSumResult flat_sum(const SeriesSpec& s, const FlatSumOptions& options = {});

struct BoundPair {
  DedekindNumber upper;
  DedekindNumber lower;
  /// The input was eventually constant: exact c# is returned for both.
  bool exact = false;
};

/// (zeta# + eps_d, zeta# - eps_d) for the partial-sum hyperreal zeta.
BoundPair upper_lower_sum(const SeriesSpec& s);

/// Upper/lower limits of a convergent sequence. `certificate` (or the
/// hyperreal's own modulus) certifies convergence.
BoundPair upper_lower_limit(const Hyperreal& a,
                            const std::optional<Hyperreal::Modulus>& certificate = std::nullopt,
                            std::size_t depth = kDefaultDepth);

/// Bijection of the naturals moving no index by more than `displacement`.
struct Permutation {
  IndexMap map;
  std::size_t displacement = 0;
  std::string label;
};

Permutation identity_permutation();
Permutation adjacent_swap();
Permutation block_reversal(std::size_t block);
/// Pseudo-random shuffle inside consecutive blocks; pure in (seed, index).
Permutation seeded_block_shuffle(std::uint64_t seed, std::size_t block);

/// Checks displacement and bijectivity on the inspected range.
void validate_permutation(const Permutation& p, std::size_t depth = kDefaultDepth);

SeriesSpec permute(const SeriesSpec& s, const Permutation& p);

ExtSumResult rearranged_flat_sum(const SeriesSpec& s, const Permutation& p,
                                 const FlatSumOptions& options = {});

/// Flat sum of the termwise-scaled series c * s_n for a positive hyperreal c.
ExtSumResult scalar_mul_flat(const Hyperreal& c, const SeriesSpec& s,
                             const FlatSumOptions& options = {});

}  // namespace nsreal::extsum
