#include "nsreal/goldbach.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "nsreal/wattenberg.hpp"

namespace nsreal::goldbach {

namespace {

std::uint64_t iroot(std::uint64_t x, unsigned e) {
  Integer r, v(static_cast<unsigned long>(x));
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), e);
  return r.get_ui();
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Integer pow_ui(std::uint64_t m, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), m, e);
  return r;
}

// Shared, append-only list of perfect powers for the series terms.
class PowerCache {
 public:
  std::uint64_t at(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (n >= values_.size()) {
      limit_ *= 4;
      values_ = perfect_powers(limit_);
    }
    return values_[n];
  }

 private:
  std::mutex mu_;
  std::uint64_t limit_ = 1 << 12;
  std::vector<std::uint64_t> values_ = perfect_powers(1 << 12);
};

}  // namespace

std::vector<std::uint64_t> perfect_powers(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (unsigned e = 2; e < 64 && (std::uint64_t{1} << e) <= limit; ++e) {
    for (std::uint64_t m = 2;; ++m) {
      unsigned __int128 p = 1;
      bool over = false;
      for (unsigned i = 0; i < e && !over; ++i) {
        p *= m;
        over = p > limit;
      }
      if (over) break;
      out.push_back(static_cast<std::uint64_t>(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_perfect_powers(std::uint64_t x) {
  if (x < 4) return 0;
  std::int64_t total = 0;
  for (unsigned e = 2; e < 64 && (std::uint64_t{1} << e) <= x; ++e) {
    int mu = moebius(e);
    if (mu != 0) total -= mu * static_cast<std::int64_t>(iroot(x, e) - 1);
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t nth_perfect_power(std::uint64_t index) {
  std::uint64_t hi = 4;
  while (count_perfect_powers(hi) <= index) hi *= 2;
  std::uint64_t lo = hi / 2;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (count_perfect_powers(mid) > index) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

bool is_perfect_power(std::uint64_t k) {
  return k >= 4 && count_perfect_powers(k) != count_perfect_powers(k - 1);
}

Rational gb_partial_sum(std::uint64_t limit) {
  if (limit < 4) throw Error(ErrorCode::kInvalidArgument, "limit must be at least 4");
  auto powers = perfect_powers(limit);
  std::vector<Rational> terms;
  terms.reserve(powers.size());
  for (auto k : powers) terms.emplace_back(Integer(1), Integer(static_cast<unsigned long>(k - 1)));
  return sum_pairwise(std::move(terms));
}

Rational tail_bound(std::uint64_t limit) {
  if (limit < 4) throw Error(ErrorCode::kInvalidArgument, "limit must be at least 4");
  // Every power above the limit is m^e with m not itself a power. For m <= s
  // the exponents start at the least e with m^e > limit and the geometric tail
  // is at most m/((m^e - 1)(m - 1)). Bases m > s have m^2 > limit and their
  // whole tail is below 1/((m-2)(m-1)), which telescopes to 1/(s-1).
  std::uint64_t s = iroot(limit, 2);
  const Integer scale = pow_ui(2, 96);
  Integer numer = 0;
  Integer big_limit(static_cast<unsigned long>(limit));
  for (std::uint64_t m = 2; m <= s; ++m) {
    if (is_perfect_power(m)) continue;
    unsigned long e = 2;
    Integer p = pow_ui(m, 2);
    while (p <= big_limit) {
      p *= static_cast<unsigned long>(m);
      ++e;
    }
    Integer den = (p - 1) * static_cast<unsigned long>(m - 1);
    Integer num = scale * static_cast<unsigned long>(m);
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    numer += q;
  }
  return Rational(numer, scale) + Rational(Integer(1), Integer(static_cast<unsigned long>(s - 1)));
}

extsum::SeriesSpec powers_recip() {
  auto cache = std::make_shared<PowerCache>();
  extsum::SeriesSpec s;
  s.term = [cache](std::size_t n) {
    return Rational(Integer(1), Integer(static_cast<unsigned long>(cache->at(n) - 1)));
  };
  s.tail_bound = [cache](std::size_t n) { return tail_bound(cache->at(n)); };
  s.sign = extsum::SignPattern::kNonNeg;
  s.label = "powers_recip";
  return s;
}

SieveReport euler_sieve(std::uint64_t depth, std::uint64_t steps) {
  if (steps < 1 || depth < steps)
    throw Error(ErrorCode::kInvalidArgument, "need depth >= steps >= 1");
  SieveReport report;
  report.depth = depth;
  std::vector<bool> covered(depth + 1, false);
  std::vector<Rational> tails;
  std::uint64_t m = 1;
  while (report.steps.size() < steps) {
    ++m;
    if (m > depth)
      throw Error(ErrorCode::kDepthTooSmall, "only " + std::to_string(report.steps.size()) +
                                                 " bases fit below depth " + std::to_string(depth));
    if (covered[m]) continue;
    SieveStep step{m, Rational(Integer(1), Integer(static_cast<unsigned long>(m - 1))), 0, 0};
    std::uint64_t p = m;
    Integer power(static_cast<unsigned long>(m));
    while (true) {
      covered[p] = true;
      ++step.exponents;
      if (p > depth / m) break;
      p *= m;
      power *= static_cast<unsigned long>(m);
    }
    // sum_{i > D} m^-i = 1/((m-1) m^D)
    step.tail = Rational(Integer(1), power * static_cast<unsigned long>(m - 1));
    tails.push_back(step.tail);
    report.removed_bases.push_back(m);
    report.steps.push_back(std::move(step));
  }

  std::vector<Rational> harmonic, uncovered, contributions;
  harmonic.reserve(depth);
  for (std::uint64_t k = 1; k <= depth; ++k) {
    Rational t(Integer(1), Integer(static_cast<unsigned long>(k)));
    if (k >= 2 && !covered[k]) uncovered.push_back(t);
    harmonic.push_back(std::move(t));
  }
  for (const auto& st : report.steps) contributions.push_back(st.contribution);
  report.coverage_gap = sum_pairwise(std::move(uncovered));
  report.tail_sum = sum_pairwise(std::move(tails));
  report.residual =
      sum_pairwise(std::move(harmonic)) - sum_pairwise(std::move(contributions)) - report.coverage_gap;
  report.residual_interval = {report.residual, report.residual + report.tail_sum};

  Rational lo = 1 - report.tail_sum - report.coverage_gap;
  Rational hi = 1 + report.tail_sum + report.coverage_gap;
  if (report.residual < lo || report.residual > hi)
    throw Error(ErrorCode::kInvalidArgument, "sieve residual escaped its bracket");
  return report;
}

extsum::ExtSumResult gb_flat_identity(std::uint64_t limit) {
  if (limit < 4) throw Error(ErrorCode::kInvalidArgument, "limit must be at least 4");
  extsum::FlatSumOptions opt;
  opt.depth = count_perfect_powers(limit) - 1;
  // Zero tolerance pins the eta interval to the last inspected index.
  opt.tolerance = 0;
  return extsum::flat_sum(powers_recip(), opt);
}

}  // namespace nsreal::goldbach
