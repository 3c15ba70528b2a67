// Shared numeric vocabulary: exact integers/rationals, closed rational
// intervals and the library-wide error type.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsreal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default number of sequence indices inspected by cofinite-proxy decisions.
inline constexpr std::size_t kDefaultDepth = 4096;
/// Number of probes used by classification.
inline constexpr std::size_t kProbeBudget = 64;

enum class ErrorCode {
  kUndetermined,
  kClassUndetermined,
  kSignUndetermined,
  kConvergenceUnknown,
  kNotConvergentAtDepth,
  kUnlimited,
  kOutOfRange,
  kDivisionByZeroAtIndex,
  kZeroTailAtDepth,
  kNotInfinitesimal,
  kInvalidArgument,
  kInvalidPermutation,
  kDepthTooSmall,
  kZeroLeadingCoefficient,
  kSearchExhausted,
  kPrecisionExhausted,
  kZeroRoot,
  kRadiusViolation,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  /// Largest absolute value of any point in the interval.
  Rational magnitude() const;
  /// Smallest absolute value of any point in the interval (0 if it straddles 0).
  Rational mignitude() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);
Interval pow(const Interval& a, unsigned exponent);
bool operator==(const Interval& a, const Interval& b);

/// Canonical "p/q" rendering (always with a denominator).
std::string to_fraction_string(const Rational& q);
/// Compact label: "p" for integers, "p/q" otherwise.
std::string to_label(const Rational& q);
std::string to_string(const Integer& z);
/// Parses "p", "p/q", "-p/q" or a plain decimal such as "0.25" or "1e-6".
Rational parse_rational(std::string_view text);

Rational abs(const Rational& q);
Integer factorial(unsigned long n);

/// Exact sum by balanced pairwise reduction; much faster than a left fold when
/// the denominators are large and mostly coprime.
Rational sum_pairwise(std::vector<Rational> terms);

}  // namespace nsreal
