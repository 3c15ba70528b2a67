#include "nsreal/extsum.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nsreal::extsum {

namespace sf = seqfield;
namespace wt = wattenberg;

SplitIndices SplitIndices::alternating(int phase) {
  std::size_t p = static_cast<std::size_t>(phase & 1);
  return {[p](std::size_t k) { return 2 * k + p; }, [p](std::size_t k) { return 2 * k + 1 - p; },
          static_cast<int>(p)};
}

SeriesSpec make_series(TermFn term, SignPattern sign, TermFn tail_bound, std::string label) {
  if (sign == SignPattern::kSplit)
    throw Error(ErrorCode::kInvalidArgument, "split series need index sets");
  return {std::move(term), sign, std::nullopt, std::move(tail_bound), std::move(label)};
}

namespace {

Rational rpow(const Rational& base, std::size_t e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

}  // namespace

SeriesSpec geometric(const Rational& first, const Rational& ratio) {
  SeriesSpec s;
  s.term = [first, ratio](std::size_t n) { return Rational(first * rpow(ratio, n)); };
  Rational r = nsreal::abs(ratio);
  if (r < 1) {
    Rational a = nsreal::abs(first);
    s.tail_bound = [a, r](std::size_t k) { return Rational(a * rpow(r, k + 1) / (1 - r)); };
  }
  if (ratio >= 0) {
    s.sign = first >= 0 ? SignPattern::kNonNeg : SignPattern::kNonPos;
  } else {
    s.sign = SignPattern::kSplit;
    s.split = SplitIndices::alternating(first >= 0 ? 0 : 1);
  }
  s.label = "geometric(" + to_label(first) + "," + to_label(ratio) + ")";
  return s;
}

SeriesSpec geom(const Rational& r) {
  SeriesSpec s = geometric(r, r);
  s.label = "geom(" + to_label(r) + ")";
  return s;
}

SeriesSpec pser(unsigned k) {
  SeriesSpec s;
  s.term = [k](std::size_t n) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), n + 1, k);
    return Rational(Integer(1), d);
  };
  if (k >= 2) {
    // sum_{m >= j+2} m^-k <= integral_{j+1}^inf x^-k dx.
    s.tail_bound = [k](std::size_t j) {
      Integer d;
      mpz_ui_pow_ui(d.get_mpz_t(), j + 1, k - 1);
      return Rational(Integer(1), d * (k - 1));
    };
  }
  s.sign = SignPattern::kNonNeg;
  s.label = "pser(" + std::to_string(k) + ")";
  return s;
}

SeriesSpec harmonic_series() {
  SeriesSpec s = pser(1);
  s.label = "harmonic";
  return s;
}

SeriesSpec alternate(const SeriesSpec& s) {
  SeriesSpec out = s;
  auto term = s.term;
  out.term = [term](std::size_t n) {
    Rational t = term(n);
    return n % 2 == 0 ? t : Rational(-t);
  };
  switch (s.sign) {
    case SignPattern::kNonNeg:
      out.sign = SignPattern::kSplit;
      out.split = SplitIndices::alternating(0);
      break;
    case SignPattern::kNonPos:
      out.sign = SignPattern::kSplit;
      out.split = SplitIndices::alternating(1);
      break;
    case SignPattern::kSplit:
      if (!s.split || !s.split->alternating_phase)
        throw Error(ErrorCode::kInvalidArgument, "alt() of a non-alternating split series");
      out.sign = *s.split->alternating_phase == 0 ? SignPattern::kNonNeg : SignPattern::kNonPos;
      out.split.reset();
      break;
  }
  out.label = "alt(" + s.label + ")";
  return out;
}

void validate(const SeriesSpec& s, std::size_t depth) {
  if (!s.term) throw Error(ErrorCode::kInvalidArgument, "series without terms");
  if (s.sign == SignPattern::kSplit && !s.split)
    throw Error(ErrorCode::kInvalidArgument, s.label + ": split series without index sets");
  for (std::size_t n = 0; n <= depth; ++n) {
    int sg = sgn(s.term(n));
    bool ok = s.sign == SignPattern::kSplit || (s.sign == SignPattern::kNonNeg ? sg >= 0 : sg <= 0);
    if (!ok)
      throw Error(ErrorCode::kInvalidArgument,
                  s.label + ": term " + std::to_string(n) + " contradicts the sign pattern");
  }
  if (s.split) {
    for (std::size_t k = 0; 2 * k <= depth; ++k) {
      if (sgn(s.term(s.split->plus(k))) < 0 || sgn(s.term(s.split->minus(k))) > 0)
        throw Error(ErrorCode::kInvalidArgument, s.label + ": split index sets are inconsistent");
    }
  }
  if (s.tail_bound) {
    Rational prev = s.tail_bound(0);
    for (std::size_t n = 1; n <= depth; n = 2 * n) {
      Rational cur = s.tail_bound(n);
      if (cur > prev || cur < 0)
        throw Error(ErrorCode::kInvalidArgument, s.label + ": tail bound is not nonincreasing");
      prev = cur;
    }
  }
}

namespace {

Rational partial_sum(const SeriesSpec& s, std::size_t n) {
  Rational acc = 0;
  for (std::size_t i = 0; i <= n; ++i) acc += s.term(i);
  return acc;
}

Interval eta_interval(const SeriesSpec& s, const FlatSumOptions& options) {
  std::size_t n = 0;
  while (n < options.depth && s.tail_bound(n) > options.tolerance) n = 2 * n + 1;
  if (n > options.depth) n = options.depth;
  Rational sn = partial_sum(s, n), tb = s.tail_bound(n);
  switch (s.sign) {
    case SignPattern::kNonNeg: return {sn, sn + tb};
    case SignPattern::kNonPos: return {sn - tb, sn};
    case SignPattern::kSplit: break;
  }
  return {sn - tb, sn + tb};
}

SeriesSpec zero_series(SignPattern sign) {
  return make_series([](std::size_t) { return Rational(0); }, sign,
                     [](std::size_t) { return Rational(0); }, "0");
}

}  // namespace

Hyperreal ext_sum_hyper(const SeriesSpec& s) {
  auto term = s.term;
  Hyperreal::Modulus modulus;
  if (s.tail_bound) modulus = s.tail_bound;
  return Hyperreal::from_generators(
      [s](std::size_t n) { return partial_sum(s, n); },
      [term](std::size_t count) {
        std::vector<Rational> out;
        out.reserve(count);
        Rational acc = 0;
        for (std::size_t i = 0; i < count; ++i) {
          acc += term(i);
          out.push_back(acc);
        }
        return out;
      },
      "S[" + s.label + "]", sf::FormKind::kOpaque, std::move(modulus));
}

std::pair<SeriesSpec, SeriesSpec> split_parts(const SeriesSpec& s) {
  switch (s.sign) {
    case SignPattern::kNonNeg: return {s, zero_series(SignPattern::kNonPos)};
    case SignPattern::kNonPos: return {zero_series(SignPattern::kNonNeg), s};
    case SignPattern::kSplit: break;
  }
  if (!s.split) throw Error(ErrorCode::kInvalidArgument, s.label + ": split without index sets");
  auto part = [&s](const IndexMap& idx, SignPattern sign, const char* tag) {
    SeriesSpec p;
    auto term = s.term;
    p.term = [term, idx](std::size_t k) { return term(idx(k)); };
    p.sign = sign;
    if (s.tail_bound) {
      auto tb = s.tail_bound;
      p.tail_bound = [tb, idx](std::size_t k) { return tb(idx(k)); };
    }
    p.label = s.label + tag;
    return p;
  };
  return {part(s.split->plus, SignPattern::kNonNeg, "+"),
          part(s.split->minus, SignPattern::kNonPos, "-")};
}

std::pair<Hyperreal, Hyperreal> ext_sum_split(const SeriesSpec& s) {
  auto [p, m] = split_parts(s);
  return {ext_sum_hyper(p), ext_sum_hyper(m)};
}

ExtSumResult flat_sum(const SeriesSpec& s, const FlatSumOptions& options) {
  validate(s, options.depth);
  if (s.sign == SignPattern::kSplit) {
    auto [p, m] = split_parts(s);
    ExtSumResult rp = flat_sum(p, options), rm = flat_sum(m, options);
    ExtSumResult out{wt::dd_add(rp.value, rm.value, options.depth), std::nullopt,
                     rp.divergent || rm.divergent};
    if (rp.eta && rm.eta) out.eta = *rp.eta + *rm.eta;
    return out;
  }
  Hyperreal zeta = ext_sum_hyper(s);
  if (s.has_tail_bound()) {
    auto eps = wt::Idempotent::eps_d();
    DedekindNumber value = s.sign == SignPattern::kNonNeg ? DedekindNumber::minus(zeta, eps)
                                                          : DedekindNumber::plus(zeta, eps);
    return {value, eta_interval(s, options), false};
  }
  auto v = zeta.prefix(options.depth + 1);
  for (const auto& x : v) {
    if (nsreal::abs(x) > options.divergence_probe) return {wt::dd_embed(zeta), std::nullopt, true};
  }
  throw Error(ErrorCode::kConvergenceUnknown,
              s.label + ": no tail bound and no divergence witness at depth " +
                  std::to_string(options.depth));
}

BoundPair upper_lower_sum(const SeriesSpec& s) {
  if (!s.has_tail_bound())
    throw Error(ErrorCode::kConvergenceUnknown, s.label + ": no convergence certificate");
  Hyperreal zeta = ext_sum_hyper(s);
  auto eps = wt::Idempotent::eps_d();
  return {DedekindNumber::plus(zeta, eps), DedekindNumber::minus(zeta, eps), false};
}

BoundPair upper_lower_limit(const Hyperreal& a, const std::optional<Hyperreal::Modulus>& certificate,
                            std::size_t depth) {
  if (auto c = sf::eventual_constant(a, depth)) {
    auto exact = wt::dd_embed(sf::make(*c));
    return {exact, exact, true};
  }
  Hyperreal x = a;
  if (certificate && *certificate) x = a.with_modulus(*certificate);
  if (!x.has_modulus())
    throw Error(ErrorCode::kConvergenceUnknown, a.label() + ": no convergence certificate");
  auto eps = wt::Idempotent::eps_d();
  return {DedekindNumber::plus(x, eps), DedekindNumber::minus(x, eps), false};
}

Permutation identity_permutation() {
  return {[](std::size_t n) { return n; }, 0, "id"};
}

Permutation adjacent_swap() {
  return {[](std::size_t n) { return n ^ std::size_t{1}; }, 1, "swap2"};
}

Permutation block_reversal(std::size_t block) {
  if (block == 0) throw Error(ErrorCode::kInvalidPermutation, "block size must be positive");
  return {[block](std::size_t n) { return (n / block) * block + (block - 1 - n % block); },
          block - 1, "reverse" + std::to_string(block)};
}

Permutation seeded_block_shuffle(std::uint64_t seed, std::size_t block) {
  if (block == 0) throw Error(ErrorCode::kInvalidPermutation, "block size must be positive");
  auto map = [seed, block](std::size_t n) {
    std::size_t b = n / block;
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(b) + 1)));
    std::vector<std::size_t> perm(block);
    for (std::size_t i = 0; i < block; ++i) perm[i] = i;
    for (std::size_t i = block; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    return b * block + perm[n % block];
  };
  return {map, block - 1, "shuffle(" + std::to_string(seed) + "," + std::to_string(block) + ")"};
}

void validate_permutation(const Permutation& p, std::size_t depth) {
  if (!p.map) throw Error(ErrorCode::kInvalidPermutation, "empty permutation");
  std::size_t span = depth + 2 * p.displacement + 1;
  std::vector<bool> seen(span + p.displacement + 1, false);
  for (std::size_t n = 0; n < span; ++n) {
    std::size_t m = p.map(n);
    std::size_t dist = m > n ? m - n : n - m;
    if (dist > p.displacement)
      throw Error(ErrorCode::kInvalidPermutation,
                  p.label + " moves index " + std::to_string(n) + " by " + std::to_string(dist));
    if (seen[m]) throw Error(ErrorCode::kInvalidPermutation, p.label + " is not injective");
    seen[m] = true;
  }
  for (std::size_t k = 0; k <= depth + p.displacement; ++k) {
    if (!seen[k])
      throw Error(ErrorCode::kInvalidPermutation,
                  p.label + " misses index " + std::to_string(k));
  }
}

SeriesSpec permute(const SeriesSpec& s, const Permutation& p) {
  if (s.sign == SignPattern::kSplit)
    throw Error(ErrorCode::kInvalidArgument, "rearrangement needs a one-signed series");
  SeriesSpec out = s;
  auto term = s.term;
  auto map = p.map;
  out.term = [term, map](std::size_t n) { return term(map(n)); };
  if (s.tail_bound) {
    auto tb = s.tail_bound;
    std::size_t d = p.displacement;
    // n > k implies map(n) > k - d.
    out.tail_bound = [tb, term, d](std::size_t k) {
      if (k >= d) return tb(k - d);
      return Rational(tb(0) + nsreal::abs(term(0)));
    };
  }
  out.label = s.label + "∘" + p.label;
  return out;
}

ExtSumResult rearranged_flat_sum(const SeriesSpec& s, const Permutation& p,
                                 const FlatSumOptions& options) {
  validate_permutation(p, options.depth);
  return flat_sum(permute(s, p), options);
}

ExtSumResult scalar_mul_flat(const Hyperreal& c, const SeriesSpec& s, const FlatSumOptions& options) {
  if (sf::sign(c, options.depth) <= 0)
    throw Error(ErrorCode::kInvalidArgument, "scalar " + c.label() + " must be positive");
  if (s.sign == SignPattern::kSplit)
    throw Error(ErrorCode::kInvalidArgument, "scalar law needs a one-signed series");
  if (c.is_constant()) {
    Rational k = *c.constant_value();
    auto term = s.term;
    TermFn tb;
    if (s.tail_bound) {
      auto t = s.tail_bound;
      tb = [t, k](std::size_t n) { return Rational(k * t(n)); };
    }
    SeriesSpec scaled = make_series([term, k](std::size_t n) { return Rational(k * term(n)); },
                                    s.sign, tb, c.label() + "*" + s.label);
    ExtSumResult r = flat_sum(scaled, options);
    if (!r.divergent)
      r.value = DedekindNumber(r.value.h(), r.value.sign(), r.value.delta().scaled(c, options.depth));
    return r;
  }
  // Hyperreal scalar: index i of the result scales every term by c(i).
  ExtSumResult base = flat_sum(s, options);
  auto term = s.term;
  Hyperreal h = Hyperreal::from_generators(
      [c, term](std::size_t i) {
        Rational ci = c.at(i), acc = 0;
        for (std::size_t n = 0; n <= i; ++n) acc += ci * term(n);
        return acc;
      },
      [c, term](std::size_t count) {
        auto cv = c.prefix(count);
        std::vector<Rational> out;
        out.reserve(count);
        Rational acc = 0;
        for (std::size_t i = 0; i < count; ++i) {
          acc += term(i);
          out.push_back(cv[i] * acc);
        }
        return out;
      },
      "S[" + c.label() + "*" + s.label + "]");
  if (base.divergent) return {wt::dd_embed(h), std::nullopt, true};
  return {DedekindNumber(h, base.value.sign(), wt::Idempotent::eps_d().scaled(c, options.depth)),
          std::nullopt, false};
}

}  // namespace nsreal::extsum
