// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Expected values come from oracles computed here, independently of the library
// code paths under test.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cut_properties.hpp"
#include "nsreal/extsum.hpp"
#include "nsreal/goldbach.hpp"
#include "nsreal/hermite.hpp"
#include "nsreal/json_io.hpp"
#include "nsreal/seqfield.hpp"
#include "nsreal/wattenberg.hpp"

using namespace nsreal;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Integer pow10(unsigned long e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, e);
  return z;
}

// ---- oracles -------------------------------------------------------------

std::set<std::uint64_t> enumerate_powers(std::uint64_t limit) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 2; m * m <= limit; ++m)
    for (std::uint64_t p = m * m;; p *= m) {
      out.insert(p);
      if (p > limit / m) break;
    }
  return out;
}

bool brute_is_power(std::uint64_t k) {
  for (std::uint64_t m = 2; m * m <= k; ++m)
    for (std::uint64_t p = m * m; p <= k; p *= m)
      if (p == k) return true;
  return false;
}

// e^x from the exponential series with the remainder bounded by twice the
// first omitted term once terms are decreasing.
Interval exp_oracle(unsigned long x, const Integer& inv_tol) {
  Rational sum = 0, term = 1;
  for (unsigned long m = 0;; ++m) {
    if (m > 0) term *= Rational(x, m);
    sum += term;
    Rational next = term * Rational(x, m + 1);
    if (m + 2 > 2 * x && 2 * next * inv_tol < 1) return {sum, sum + 2 * next};
  }
}

// M_k through the shift identity: expand f(x + k) with integer arithmetic and
// weight each coefficient by mu! / (p-1)!.
Integer moment_oracle(unsigned n, unsigned p, unsigned k) {
  std::vector<Integer> c{1};
  auto times_linear = [&c](long root) {  // multiply by (y - root)
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * root;
    }
    c = std::move(next);
  };
  for (unsigned i = 0; i + 1 < p; ++i) times_linear(-long(k));
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned i = 0; i < p; ++i) times_linear(long(j) - long(k));
  Integer acc = 0, fact = 1, pm1 = 1;
  for (unsigned i = 2; i < p; ++i) pm1 *= i;
  for (std::size_t mu = 0; mu < c.size(); ++mu) {
    if (mu > 0) fact *= static_cast<unsigned long>(mu);
    acc += c[mu] * fact;
  }
  return acc / pm1;
}

const Rational& pi_50() {
  static const Rational pi = parse_rational("3.14159265358979323846264338327950288419716939937510");
  return pi;
}

// ---- criteria ------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  auto start = Clock::now();
  Rational s = goldbach::gb_partial_sum(1000000);
  Rational gap = 1 - s;
  o.require(gap > 0, "1 - S must be positive");
  o.require(gap <= Rational(3, 1000), "1 - S exceeds 3e-3");
  double t = seconds_since(start);
  o.require(t < 10.0, "partial sum slower than 10 s");

  Rational bound = goldbach::tail_bound(1000000);
  o.require(gap <= bound, "1 - S exceeds the tail bound");
  auto powers = enumerate_powers(10000000);
  std::vector<Rational> chunk, head;
  for (auto k : powers) (k <= 1000000 ? head : chunk).emplace_back(1, k - 1);
  o.require(sum_pairwise(head) == s, "partial sum disagrees with enumerated powers");
  o.require(sum_pairwise(chunk) <= bound, "mass on (1e6, 1e7] exceeds the tail bound");
  std::ostringstream msg;
  msg << "1 - S = " << std::setprecision(6) << gap.get_d() << ", bound " << bound.get_d();
  o.notes.push_back(msg.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto start = Clock::now();
  auto r = goldbach::euler_sieve(10000, 20);
  o.require(seconds_since(start) < 5.0, "sieve slower than 5 s");
  std::vector<std::uint64_t> expected;
  for (std::uint64_t m = 2; expected.size() < 20; ++m)
    if (!brute_is_power(m)) expected.push_back(m);
  o.require(r.removed_bases == expected, "removed bases differ from the non-powers in order");
  o.require(r.steps.size() == 20, "expected 20 steps");
  for (const auto& st : r.steps)
    o.require(st.contribution == Rational(1, st.base - 1),
              "contribution of base " + std::to_string(st.base) + " is not 1/(m-1)");
  o.require(r.residual_interval.contains(Rational(1)), "residual interval misses 1");
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto start = Clock::now();
  o.require(hermite::hermite_M(1, 3, 0) == 32, "M(1,3,0) != 32");
  o.require(hermite::hermite_M(1, 3, 1) == 87, "M(1,3,1) != 87");
  const Integer inv_tol = pow10(40);
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
      Integer m0 = hermite::hermite_M(n, p, 0);
      std::string tag = "(n=" + std::to_string(n) + ", p=" + std::to_string(p);
      o.require(m0 == moment_oracle(n, p, 0), "M_0 disagrees with the shift oracle " + tag + ")");
      o.require(!mpz_divisible_ui_p(m0.get_mpz_t(), p), "p divides M_0 " + tag + ")");
      for (unsigned k = 1; k <= n; ++k) {
        std::string tk = tag + ", k=" + std::to_string(k) + ")";
        Integer mk = hermite::hermite_M(n, p, k);
        o.require(mk == moment_oracle(n, p, k), "M_k disagrees with the shift oracle " + tk);
        o.require(mpz_divisible_ui_p(mk.get_mpz_t(), p), "p does not divide M_k " + tk);
        auto est = hermite::hermite_eps(n, p, k, Rational(Integer(1), inv_tol));
        Interval oracle = Rational(m0) * exp_oracle(k, inv_tol * (m0 < 0 ? Integer(-m0) : m0) + 1) -
                          Interval::point(Rational(mk));
        o.require(est.interval.lo <= oracle.hi && oracle.lo <= est.interval.hi,
                  "eps interval misses the oracle " + tk);
        o.require(oracle.magnitude() <= est.closed_form_bound, "eps exceeds the closed-form bound " + tk);
        o.require(est.interval.magnitude() <= est.closed_form_bound,
                  "eps interval exceeds the closed-form bound " + tk);
      }
    }
  }
  o.require(seconds_since(start) < 30.0, "slower than 30 s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Integer inv_tol = pow10(60);
  for (const auto& b : {std::vector<Rational>{3, -1}, std::vector<Rational>{-87, 32}}) {
    auto start = Clock::now();
    std::string tag = "(" + to_label(b[0]) + ", " + to_label(b[1]) + ")";
    try {
      auto cert = hermite::nonvanish_certificate(b);
      Interval value = Interval::point(0);
      for (std::size_t k = 0; k < b.size(); ++k) value = value + b[k] * exp_oracle(k, inv_tol);
      o.require(value.mignitude() > cert.lower_bound, "lower bound not below |sum b_k e^k| for " + tag);
      auto doc = json_io::certificate(cert);
      auto parsed = json_io::certificate_from_json(json_io::Json::parse(doc.dump()));
      o.require(hermite::verify_certificate(parsed).all(), "certificate JSON does not re-verify for " + tag);
      auto tampered = parsed;
      tampered.M[1] += 1;
      o.require(!hermite::verify_certificate(tampered).all(), "tampered certificate still verifies " + tag);
      o.notes.push_back(tag + ": p = " + std::to_string(cert.prime) + ", lower bound ~ " +
                        [&] {
                          std::ostringstream s;
                          s << std::setprecision(3) << cert.lower_bound.get_d();
                          return s.str();
                        }());
    } catch (const Error& e) {
      o.require(false, tag + " threw " + e.what());
    }
    o.require(seconds_since(start) < 20.0, "certificate for " + tag + " slower than 20 s");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto start = Clock::now();
  auto cs = hermite::cf_convergents(hermite::pi_interval, 4);
  const std::vector<std::pair<long, long>> expected{{3, 1}, {22, 7}, {333, 106}, {355, 113}};
  o.require(cs.size() == 4, "expected four convergents of pi");
  for (std::size_t i = 0; i < cs.size() && i < expected.size(); ++i) {
    std::string tag = cs[i].p.get_str() + "/" + cs[i].q.get_str();
    o.require(cs[i].p == expected[i].first && cs[i].q == expected[i].second, "unexpected convergent " + tag);
    Rational inv_q2(Integer(1), cs[i].q * cs[i].q);
    o.require(cs[i].error.hi < inv_q2, "interval error bound not below 1/q^2 for " + tag);
    Rational d = abs(Rational(pi_50() - Rational(cs[i].p, cs[i].q)));
    o.require(d + Rational(Integer(1), pow10(50)) < inv_q2, "50-digit pi check fails for " + tag);
  }
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 3}, {4, 3}}) {
    auto [c, holds] = hermite::liouville_approx(m, n);
    std::string tag = "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    // Oracle: |L - p/q| is at least the first omitted term 10^-((n+1)!).
    unsigned long f = 1;
    for (unsigned j = 2; j <= n + 1; ++j) f *= j;
    Rational first_omitted(Integer(1), pow10(f));
    Integer qm;
    mpz_pow_ui(qm.get_mpz_t(), c.q.get_mpz_t(), m);
    bool oracle_holds = first_omitted * 2 < Rational(Integer(1), qm);
    bool oracle_fails = first_omitted >= Rational(Integer(1), qm);
    if (oracle_fails)
      o.notes.push_back("liouville " + tag + ": |L - p/q| >= 10^-" + std::to_string(f) + " = 1/q^" +
                        std::to_string(m) + ", so the inequality cannot hold");
    o.require(holds == oracle_holds || !(oracle_holds || oracle_fails), "library disagrees with oracle " + tag);
    o.require(holds, "liouville_approx fails " + tag);
  }
  o.require(seconds_since(start) < 2.0, "slower than 2 s");
  return o;
}

Outcome criterion6() {
  Outcome o;
  try {
    auto t = cut_properties::run_all(1000, kDefaultDepth, 6);
    for (const auto& f : t.failures) o.require(false, f);
    o.notes.push_back(std::to_string(t.checks) + " checks on 3000 generated forms; T/R/S counts " +
                      std::to_string(t.t) + "/" + std::to_string(t.r) + "/" + std::to_string(t.s));
  } catch (const Error& e) {
    o.require(false, std::string("threw ") + e.what());
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto start = Clock::now();
  using wattenberg::DedekindNumber;
  using wattenberg::Idempotent;
  const auto eps = Idempotent::eps_d();
  try {
    auto g = extsum::geom(Rational(1, 2));
    auto base = extsum::flat_sum(g);
    o.require(wattenberg::dd_equal(base.value, DedekindNumber::minus(seqfield::make(1), eps)),
              "flat_sum(geom(1/2)) is not 1# - eps_d");

    auto lim = extsum::upper_lower_limit(seqfield::reciprocal_succ());
    o.require(wattenberg::dd_equal(lim.upper, DedekindNumber::plus(seqfield::make(0), eps)),
              "upper limit of 1/(n+1) is not 0# + eps_d");
    o.require(wattenberg::dd_equal(lim.lower, DedekindNumber::minus(seqfield::make(0), eps)),
              "lower limit of 1/(n+1) is not 0# - eps_d");

    extsum::FlatSumOptions opt;
    std::mt19937_64 rng(7);
    for (const auto& s : {g, extsum::pser(2)}) {
      auto ref = extsum::flat_sum(s, opt);
      for (int i = 0; i < 100; ++i) {
        auto perm = extsum::seeded_block_shuffle(rng(), 2 + rng() % 15);
        auto r = extsum::rearranged_flat_sum(s, perm, opt);
        o.require(wattenberg::dd_equal(r.value, ref.value, opt.depth), "rearrangement changes " + s.label);
        o.require(r.eta && ref.eta && r.eta->lo <= ref.eta->hi && ref.eta->lo <= r.eta->hi,
                  "rearranged standard part moves for " + s.label);
      }
    }

    for (const auto& c : {seqfield::make(2), seqfield::make(3), seqfield::omega()}) {
      auto lhs = extsum::scalar_mul_flat(c, g, opt);
      auto rhs = wattenberg::dd_scalar_mul(c, base.value, opt.depth);
      o.require(wattenberg::dd_equal(lhs.value, rhs, opt.depth), "scalar law fails for " + c.label());
    }
  } catch (const Error& e) {
    o.require(false, std::string("threw ") + e.what());
  }
  o.require(seconds_since(start) < 10.0, "slower than 10 s");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
  using seqfield::ArithOp;
  long mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (i % 97 == 0) b = 0;
    auto x = seqfield::make(a), y = seqfield::make(b);
    // Non-constant companions force the pointwise path.
    auto u = seqfield::make([a](std::size_t n) -> Rational { return a + Rational(long(n)); }, "u");
    auto v = seqfield::make([b](std::size_t n) -> Rational { return b * Rational(long(n) + 1); }, "v");
    std::size_t n = static_cast<std::size_t>(i % 300);
    Rational un = a + Rational(long(n)), vn = b * Rational(long(n) + 1);
    auto inv = [](const Rational& q) { return q == 0 ? Rational(0) : Rational(1 / q); };
    bool ok = *seqfield::arith(ArithOp::kAdd, x, y).constant_value() == a + b &&
              *seqfield::arith(ArithOp::kSub, x, y).constant_value() == a - b &&
              *seqfield::arith(ArithOp::kMul, x, y).constant_value() == a * b &&
              *seqfield::arith(ArithOp::kAbs, x).constant_value() == abs(a) &&
              *seqfield::arith(ArithOp::kTildeInv, y).constant_value() == inv(b) &&
              seqfield::arith(ArithOp::kAdd, u, v).at(n) == un + vn &&
              seqfield::arith(ArithOp::kSub, u, v).at(n) == un - vn &&
              seqfield::arith(ArithOp::kMul, u, v).at(n) == un * vn &&
              seqfield::arith(ArithOp::kTildeInv, v).at(n) == inv(vn) &&
              seqfield::arith(ArithOp::kAdd, u, v).prefix(n + 1).back() == un + vn;
    mismatches += !ok;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " arithmetic mismatches");

  auto z = seqfield::make([](std::size_t n) { return n % 4 == 0 ? Rational(0) : Rational(long(n), 3); }, "z");
  auto zi = seqfield::tilde_inv(z);
  for (std::size_t n = 0; n <= 256; ++n)
    o.require(zi.at(n) == (n % 4 == 0 ? Rational(0) : Rational(3, long(n))), "tilde inverse at " + std::to_string(n));

  for (int trial = 0; trial < 50; ++trial) {
    Rational a(num(rng), den(rng)), step(num(rng) / 100, den(rng));
    auto x = seqfield::make([a, step](std::size_t n) -> Rational { return a + step * Rational(long(n)); }, "x");
    auto f = seqfield::floor(x);
    for (std::size_t n = 0; n <= 256; ++n) {
      Rational fl(f.at(n)), xv = x.at(n);
      if (!(fl <= xv && xv < fl + 1)) {
        o.require(false, "floor contract at index " + std::to_string(n));
        break;
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Goldbach-Euler partial sum and tail bound", criterion1},
      {"sieve structure", criterion2},
      {"Hermite integers, divisibility and error terms", criterion3},
      {"non-vanishing certificates", criterion4},
      {"Dirichlet and Liouville approximations", criterion5},
      {"cut algebra properties", criterion6},
      {"external sums", criterion7},
      {"sequence arithmetic against rationals", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("uncaught: ") + e.what());
    }
    double t = seconds_since(start);
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << std::fixed << std::setprecision(2) << t << " s)\n";
    for (const auto& note : o.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
