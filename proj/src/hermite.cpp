#include "nsreal/hermite.hpp"

#include <algorithm>

namespace nsreal::hermite {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1, Integer(0));
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& c) { return IntPolynomial({c, Integer(1)}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long IntPolynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<long>(i);
  return -1;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(const Integer& shift) const {
  IntPolynomial acc;
  IntPolynomial step = linear(shift);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * step + IntPolynomial({*it});
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result({Integer(1)}), b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long next_prime(unsigned long n) {
  unsigned long c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

IntPolynomial poly_expand_f(unsigned n, unsigned p) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  IntPolynomial f = IntPolynomial::monomial(1, p - 1);
  for (unsigned j = 1; j <= n; ++j) f = f * pow(IntPolynomial::linear(-Integer(j)), p);
  return f;
}

Rational elem_sym(const std::vector<Rational>& values, unsigned m) {
  if (m < 1 || m > values.size())
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= m <= number of values");
  std::vector<Rational> e(m + 1, Rational(0));
  e[0] = 1;
  for (const auto& z : values) {
    if (z == 0) throw Error(ErrorCode::kZeroRoot, "zero root has no reciprocal");
    Rational r = 1 / z;
    for (unsigned j = m; j >= 1; --j) e[j] += r * e[j - 1];
  }
  return e[m];
}

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> a{Rational(1)};
  for (const auto& z : roots) {
    if (z == 0) throw Error(ErrorCode::kZeroRoot, "zero root has no reciprocal");
    Rational r = -1 / z;
    a.push_back(0);
    for (std::size_t j = a.size() - 1; j >= 1; --j) a[j] += r * a[j - 1];
  }
  return a;
}

namespace {

// sum c_mu mu! / (p-1)!, with the division checked.
Integer factorial_moment(const IntPolynomial& f, unsigned p) {
  Integer acc = 0, fact = 1;
  const auto& c = f.coefficients();
  for (std::size_t mu = 0; mu < c.size(); ++mu) {
    if (mu > 0) fact *= static_cast<unsigned long>(mu);
    acc += c[mu] * fact;
  }
  Integer denom = factorial(p - 1);
  if (!mpz_divisible_p(acc.get_mpz_t(), denom.get_mpz_t()))
    throw Error(ErrorCode::kInvalidArgument, "factorial moment not divisible by (p-1)!");
  Integer q;
  mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), denom.get_mpz_t());
  return q;
}

}  // namespace

Integer hermite_M(unsigned n, unsigned p, unsigned k) {
  if (k > n) throw Error(ErrorCode::kInvalidArgument, "need k <= n");
  if (k == 0) return factorial_moment(poly_expand_f(n, p), p);
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  // f(u + k) = (u + k)^(p-1) * prod_j (u + k - j)^p
  IntPolynomial g = pow(IntPolynomial::linear(Integer(k)), p - 1);
  for (unsigned j = 1; j <= n; ++j)
    g = g * pow(IntPolynomial::linear(Integer(static_cast<long>(k) - static_cast<long>(j))), p);
  return factorial_moment(g, p);
}

Interval exp_interval(unsigned long x, const Rational& tolerance) {
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (x == 0) return Interval::point(1);
  Rational sum = 0, term = 1;
  for (unsigned long m = 0;; ++m) {
    sum += term;
    Rational next = term * x / (m + 1);
    // Beyond m + 1 the terms shrink by at least half, so the rest is <= 2 * next.
    if (m + 3 > 2 * x && 2 * next <= tolerance) return {sum, sum + 2 * next};
    term = next;
  }
}

Interval e_interval(const Rational& tolerance) { return exp_interval(1, tolerance); }

namespace {

// arctan(1/q) bracketed by consecutive alternating partial sums.
Interval arctan_recip(unsigned long q, const Rational& tolerance) {
  Rational sum = 0;
  Integer q2 = Integer(q) * q, power = q;
  for (unsigned long i = 0;; ++i) {
    Rational term(Integer(1), power * (2 * i + 1));
    Rational next = i % 2 == 0 ? Rational(sum + term) : Rational(sum - term);
    Rational following(Integer(1), power * q2 * (2 * i + 3));
    if (following <= tolerance) return {std::min(sum, next), std::max(sum, next)};
    sum = next;
    power *= q2;
  }
}

}  // namespace

Interval pi_interval(const Rational& tolerance) {
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  Rational t = tolerance / 40;
  Interval a = arctan_recip(5, t), b = arctan_recip(239, t);
  while (true) {
    Interval pi = Rational(16) * a - Rational(4) * b;
    if (pi.width() <= tolerance) return pi;
    t /= 4;
    a = arctan_recip(5, t);
    b = arctan_recip(239, t);
  }
}

EpsEstimate hermite_eps(unsigned n, unsigned p, unsigned k, const Rational& tolerance) {
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  Integer m0 = hermite_M(n, p, 0), mk = hermite_M(n, p, k);
  Integer mag = m0 < 0 ? Integer(-m0) : m0;
  Interval ek = mag == 0 ? exp_interval(k, Rational(1, 1000000)) : exp_interval(k, tolerance / mag);
  EpsEstimate out;
  out.interval = Rational(m0) * ek - Interval::point(Rational(mk));

  Integer a;
  mpz_ui_pow_ui(a.get_mpz_t(), n, n + 1);
  Integer apow;
  mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), p - 1);
  Rational ek_hi = exp_interval(k, Rational(1, 1000000)).hi;
  out.closed_form_bound = Rational(n) * ek_hi * Rational(a) * Rational(apow) / Rational(factorial(p - 1));
  return out;
}

namespace {

struct Scaled {
  Integer lcm;
  std::vector<Integer> B;
  Integer threshold;
};

Scaled scale_coefficients(const std::vector<Rational>& b) {
  Scaled s;
  s.lcm = 1;
  for (const auto& x : b) mpz_lcm(s.lcm.get_mpz_t(), s.lcm.get_mpz_t(), x.get_den_mpz_t());
  s.threshold = static_cast<unsigned long>(b.size() - 1);
  for (const auto& x : b) {
    Rational scaled = x * s.lcm;
    s.B.push_back(scaled.get_num());
    s.threshold = std::max(s.threshold, Integer(x.get_den()));
  }
  Integer b0 = s.B[0] < 0 ? Integer(-s.B[0]) : s.B[0];
  s.threshold = std::max(s.threshold, b0);
  return s;
}

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

// Magnitude bounds |B_k eps_k| and their sum, at a precision that keeps the
// rounding below the 1/2 margin.
std::pair<std::vector<Rational>, Rational> eps_ledger(const std::vector<Integer>& B, unsigned n,
                                                      unsigned p) {
  Integer total = 0;
  for (const auto& x : B) total += abs_int(x);
  Rational tol(Integer(1), 8 * (total + 1));
  std::vector<Rational> ledger{Rational(0)};
  Rational sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    Rational m = B[k] == 0 ? Rational(0)
                           : Rational(abs_int(B[k])) * hermite_eps(n, p, k, tol).interval.magnitude();
    ledger.push_back(m);
    sum += m;
  }
  return {ledger, sum};
}

}  // namespace

HermiteCertificate nonvanish_certificate(const std::vector<Rational>& b, unsigned long prime_cap) {
  if (b.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two coefficients");
  if (b[0] == 0) throw Error(ErrorCode::kZeroLeadingCoefficient, "b_0 must be nonzero");
  Scaled s = scale_coefficients(b);
  const unsigned n = static_cast<unsigned>(b.size() - 1);
  if (!s.threshold.fits_ulong_p() || s.threshold.get_ui() >= prime_cap)
    throw Error(ErrorCode::kSearchExhausted,
                "prime threshold " + s.threshold.get_str() + " exceeds cap " + std::to_string(prime_cap));
  for (unsigned long p = next_prime(s.threshold.get_ui()); p <= prime_cap; p = next_prime(p)) {
    HermiteCertificate c;
    c.coefficients = b;
    c.common_denominator = s.lcm;
    c.prime = p;
    for (unsigned k = 0; k <= n; ++k) c.M.push_back(hermite_M(n, static_cast<unsigned>(p), k));
    Integer pz(p);
    c.checks.m0_nondivisible = !mpz_divisible_p(Integer(s.B[0] * c.M[0]).get_mpz_t(), pz.get_mpz_t());
    c.checks.mk_divisible = true;
    for (unsigned k = 1; k <= n; ++k)
      c.checks.mk_divisible = c.checks.mk_divisible && mpz_divisible_p(c.M[k].get_mpz_t(), pz.get_mpz_t());
    c.integer_combination = 0;
    for (unsigned k = 0; k <= n; ++k) c.integer_combination += s.B[k] * c.M[k];
    if (!c.checks.m0_nondivisible || !c.checks.mk_divisible) continue;
    std::tie(c.eps_ledger, c.eps_bound) = eps_ledger(s.B, n, static_cast<unsigned>(p));
    c.checks.eps_half = c.eps_bound < Rational(1, 2);
    if (!c.checks.eps_half) continue;
    c.lower_bound = Rational(Integer(1), 2 * s.lcm * abs_int(c.M[0]));
    return c;
  }
  throw Error(ErrorCode::kSearchExhausted, "no prime up to " + std::to_string(prime_cap) +
                                               " certifies the combination");
}

CertificateChecks verify_certificate(const HermiteCertificate& cert) {
  CertificateChecks fail;
  const auto& b = cert.coefficients;
  if (b.size() < 2 || b[0] == 0 || cert.M.size() != b.size()) return fail;
  Scaled s = scale_coefficients(b);
  const unsigned n = static_cast<unsigned>(b.size() - 1);
  unsigned long p = cert.prime;
  if (s.lcm != cert.common_denominator || !is_prime(p) || Integer(p) <= s.threshold) return fail;
  for (unsigned k = 0; k <= n; ++k)
    if (hermite_M(n, static_cast<unsigned>(p), k) != cert.M[k]) return fail;
  Integer combo = 0;
  for (unsigned k = 0; k <= n; ++k) combo += s.B[k] * cert.M[k];
  if (combo != cert.integer_combination) return fail;

  CertificateChecks out;
  Integer pz(p);
  out.m0_nondivisible = !mpz_divisible_p(Integer(s.B[0] * cert.M[0]).get_mpz_t(), pz.get_mpz_t()) &&
                        !mpz_divisible_p(combo.get_mpz_t(), pz.get_mpz_t());
  out.mk_divisible = true;
  for (unsigned k = 1; k <= n; ++k)
    out.mk_divisible = out.mk_divisible && mpz_divisible_p(cert.M[k].get_mpz_t(), pz.get_mpz_t());
  auto [ledger, bound] = eps_ledger(s.B, n, static_cast<unsigned>(p));
  out.eps_half = bound < Rational(1, 2) && bound <= cert.eps_bound && cert.eps_bound < Rational(1, 2);
  if (cert.lower_bound != Rational(Integer(1), 2 * s.lcm * abs_int(cert.M[0]))) out.eps_half = false;
  return out;
}

namespace {

std::vector<Integer> partial_quotients(Rational x, std::size_t limit) {
  std::vector<Integer> out;
  while (out.size() < limit) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    out.push_back(a);
    Rational frac = x - a;
    if (frac == 0) break;
    x = 1 / frac;
  }
  return out;
}

Interval abs_interval(const Interval& d) { return {d.mignitude(), d.magnitude()}; }

}  // namespace

std::vector<Convergent> cf_convergents(const IntervalOracle& alpha, std::size_t count,
                                       unsigned max_digits) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be at least 1");
  for (unsigned digits = 16; digits <= max_digits; digits *= 2) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Interval j = alpha(Rational(Integer(1), scale));
    std::vector<Integer> quotients;
    bool exact = j.lo == j.hi;
    if (exact) {
      quotients = partial_quotients(j.lo, count);
    } else {
      // Both endpoints in one cylinder set puts the whole interval there.
      auto qa = partial_quotients(j.lo, count + 1), qb = partial_quotients(j.hi, count + 1);
      for (std::size_t i = 0; i + 1 < qa.size() && i + 1 < qb.size() && qa[i] == qb[i]; ++i)
        quotients.push_back(qa[i]);
      if (quotients.size() > count) quotients.resize(count);
      if (quotients.size() < count) continue;
    }
    std::vector<Convergent> out;
    Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    bool certified = true;
    for (const auto& a : quotients) {
      Integer p = a * p0 + p1, q = a * q0 + q1;
      p1 = p0;
      q1 = q0;
      p0 = p;
      q0 = q;
      Interval err = abs_interval(j - Interval::point(Rational(p, q)));
      if (!(err.hi < Rational(Integer(1), q * q))) certified = false;
      out.push_back({p, q, err});
    }
    if (certified) return out;
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "oracle precision 10^-" + std::to_string(max_digits) + " does not separate " +
                  std::to_string(count) + " partial quotients");
}

std::pair<Convergent, bool> liouville_approx(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "need m, n >= 1");
  if (n > 8) throw Error(ErrorCode::kInvalidArgument, "n! digits beyond n = 8 are impractical");
  auto fact = [](unsigned k) {
    unsigned long f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
  };
  auto ten = [](unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
  };
  unsigned long nf = fact(n);
  Integer q = ten(nf), p = 0;
  for (unsigned j = 1; j <= n; ++j) p += ten(nf - fact(j));
  // L - p/q = 10^-(n+1)! + 10^-(n+2)! + ... lies in [10^-(n+1)!, 10^-(n+1)! + 2*10^-(n+2)!].
  Rational first(Integer(1), ten(fact(n + 1)));
  Rational rest(Integer(2), ten(fact(n + 2)));
  Interval err{first, first + rest};
  Rational bound(Integer(1), ten(nf * m));
  bool holds = err.lo > 0 && err.hi < bound;
  return {{p, q, err}, holds};
}

Interval eval_q_analytic(const std::function<Rational(std::size_t)>& coeffs, const Interval& x,
                         std::size_t terms, const Rational& coeff_bound) {
  if (terms < 1) throw Error(ErrorCode::kInvalidArgument, "terms must be at least 1");
  if (coeff_bound < 0) throw Error(ErrorCode::kInvalidArgument, "coefficient bound must be >= 0");
  Rational r = coeff_bound * x.magnitude();
  if (r >= 1)
    throw Error(ErrorCode::kRadiusViolation,
                "|x| reaches the radius 1/" + to_label(coeff_bound));
  Interval acc = Interval::point(0);
  for (std::size_t i = terms + 1; i-- > 0;) acc = acc * x + Interval::point(coeffs(i));
  Rational tail = 1;
  for (std::size_t i = 0; i <= terms; ++i) tail *= r;
  tail /= 1 - r;
  return {acc.lo - tail, acc.hi + tail};
}

}  // namespace nsreal::hermite
