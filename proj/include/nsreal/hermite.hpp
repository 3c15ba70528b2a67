// Exact Hermite integers for e, their error terms, non-vanishing certificates
// for rational combinations sum b_k e^k, and rational approximation helpers.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nsreal/common.hpp"

namespace nsreal::hermite {

/// Dense integer polynomial, coefficient i at x^i; the leading entry is never 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(const Integer& c, std::size_t exponent);
  /// x + c
  static IntPolynomial linear(const Integer& c);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  long valuation() const;
  Integer evaluate(const Integer& x) const;
  /// p(x + shift).
  IntPolynomial shifted(const Integer& shift) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

bool is_prime(unsigned long n);
unsigned long next_prime(unsigned long n);

/// x^(p-1) * prod_{j=1..n} (x - j)^p.
IntPolynomial poly_expand_f(unsigned n, unsigned p);

/// e_m of the reciprocals 1/z_i. Throws kZeroRoot on a zero value.
Rational elem_sym(const std::vector<Rational>& values, unsigned m);

/// Coefficients a_0 = 1, a_1, ... of P(z) = prod (1 - z/z_i).
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots);

/// sum_mu c_mu mu! / (p-1)! over the expansion of f shifted by k.
Integer hermite_M(unsigned n, unsigned p, unsigned k);

/// Interval of width <= tolerance containing exp(x) for a nonnegative integer x.
Interval exp_interval(unsigned long x, const Rational& tolerance);
Interval e_interval(const Rational& tolerance);
/// Interval of width <= tolerance containing pi (Machin's formula).
Interval pi_interval(const Rational& tolerance);

struct EpsEstimate {
  /// Encloses e^k * M_0 - M_k.
  Interval interval;
  /// n * (e^k n^(n+1)) * (n^(n+1))^(p-1) / (p-1)!, with e^k bounded above.
  Rational closed_form_bound;
};

/// Requires 1 <= k <= n. The interval width does not exceed tolerance.
EpsEstimate hermite_eps(unsigned n, unsigned p, unsigned k, const Rational& tolerance);

struct CertificateChecks {
  bool m0_nondivisible = false;
  bool mk_divisible = false;
  bool eps_half = false;

  bool all() const { return m0_nondivisible && mk_divisible && eps_half; }
};

struct HermiteCertificate {
  std::vector<Rational> coefficients;
  Integer common_denominator;
  unsigned long prime = 0;
  std::vector<Integer> M;
  Integer integer_combination;
  /// Per-k magnitudes bounding |lcm * b_k * eps_k| (entry 0 is 0).
  std::vector<Rational> eps_ledger;
  Rational eps_bound;
  Rational lower_bound;
  CertificateChecks checks;
};

inline constexpr unsigned long kPrimeCap = 10000;

/// Finds a prime p making sum lcm*b_k*(M_k + eps_k) a nonzero integer plus a
/// part below 1/2, which bounds |sum b_k e^k| from below.
/// Throws kZeroLeadingCoefficient, kInvalidArgument, kSearchExhausted.
HermiteCertificate nonvanish_certificate(const std::vector<Rational>& b,
                                         unsigned long prime_cap = kPrimeCap);

/// Recomputes every check of a certificate from its own fields.
CertificateChecks verify_certificate(const HermiteCertificate& cert);

/// Interval oracle: returns an interval of width <= the requested tolerance.
using IntervalOracle = std::function<Interval(const Rational&)>;

struct Convergent {
  Integer p;
  Integer q;
  /// Encloses |alpha - p/q|.
  Interval error;
};

/// First `count` convergents; stops early after the last one of a rational.
/// The oracle is queried at 10^-d for d doubling up to max_digits; throws
/// kPrecisionExhausted if that cannot separate the needed partial quotients.
std::vector<Convergent> cf_convergents(const IntervalOracle& alpha, std::size_t count,
                                       unsigned max_digits = 1024);

/// Partial sums of L = sum_j 10^(-j!): p/q with q = 10^(n!), plus whether
/// 0 < |L - p/q| < 1/q^m holds.
std::pair<Convergent, bool> liouville_approx(unsigned m, unsigned n);

/// sum_{i <= terms} a_i x^i with the tail bounded via |a_i| <= G^i for i > terms.
/// Throws kRadiusViolation unless G * max|x| < 1.
Interval eval_q_analytic(const std::function<Rational(std::size_t)>& coeffs, const Interval& x,
                         std::size_t terms, const Rational& coeff_bound);

}  // namespace nsreal::hermite
