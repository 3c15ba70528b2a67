#include "nsreal/seqfield.hpp"

#include <array>
#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace nsreal::seqfield {

namespace {

// Longest prefix evaluated so far. Values never change, so relabelled copies
// of a hyperreal may share it.
struct PrefixMemo {
  std::mutex mu;
  std::shared_ptr<const std::vector<Rational>> values;
};

// Prefixes longer than this are recomputed rather than kept alive.
constexpr std::size_t kMemoCap = 16385;

}  // namespace

struct Hyperreal::Impl {
  std::shared_ptr<PrefixMemo> memo = std::make_shared<PrefixMemo>();
  Generator gen;
  PrefixGenerator prefix;
  std::string label;
  FormKind form = FormKind::kOpaque;
  std::optional<Rational> constant;
  Modulus modulus;
};

Hyperreal::Hyperreal(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Hyperreal::Hyperreal() : Hyperreal(constant(0)) {}

Hyperreal Hyperreal::constant(const Rational& q) {
  auto impl = std::make_shared<Impl>();
  impl->gen = [q](std::size_t) { return q; };
  impl->prefix = [q](std::size_t count) { return std::vector<Rational>(count, q); };
  impl->label = to_label(q);
  impl->form = FormKind::kConstant;
  impl->constant = q;
  impl->modulus = [](std::size_t) { return Rational(0); };
  return Hyperreal(std::move(impl));
}

Hyperreal Hyperreal::from_generator(Generator gen, std::string label, FormKind form,
                                    Modulus modulus) {
  return from_generators(std::move(gen), {}, std::move(label), form, std::move(modulus));
}

Hyperreal Hyperreal::from_generators(Generator gen, PrefixGenerator prefix,
                                     std::string label, FormKind form,
                                     Modulus modulus) {
  auto impl = std::make_shared<Impl>();
  impl->gen = std::move(gen);
  impl->prefix = std::move(prefix);
  impl->label = std::move(label);
  impl->form = form == FormKind::kConstant ? FormKind::kOpaque : form;
  impl->modulus = std::move(modulus);
  return Hyperreal(std::move(impl));
}

Hyperreal Hyperreal::builtin(Builtin which) {
  switch (which) {
    case Builtin::kOmega:
      return from_generators(
          [](std::size_t n) { return Rational(static_cast<unsigned long>(n + 1)); },
          [](std::size_t count) {
            std::vector<Rational> out;
            out.reserve(count);
            for (std::size_t n = 0; n < count; ++n)
              out.emplace_back(static_cast<unsigned long>(n + 1));
            return out;
          },
          "omega", FormKind::kRationalFunction);
    case Builtin::kHarmonic:
      return from_generators(
          [](std::size_t n) {
            Rational s = 0;
            for (std::size_t i = 1; i <= n + 1; ++i)
              s += Rational(1, static_cast<unsigned long>(i));
            return s;
          },
          [](std::size_t count) {
            std::vector<Rational> out;
            out.reserve(count);
            Rational s = 0;
            for (std::size_t i = 1; i <= count; ++i) {
              s += Rational(1, static_cast<unsigned long>(i));
              out.push_back(s);
            }
            return out;
          },
          "E", FormKind::kOpaque);
    case Builtin::kReciprocalSucc:
      return from_generator(
          [](std::size_t n) { return Rational(1, static_cast<unsigned long>(n + 1)); },
          "r", FormKind::kRationalFunction,
          [](std::size_t n) { return Rational(1, static_cast<unsigned long>(n + 1)); });
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown builtin");
}

Rational Hyperreal::at(std::size_t n) const { return impl_->gen(n); }

Hyperreal::PrefixView Hyperreal::prefix_view(std::size_t count) const {
  auto& memo = *impl_->memo;
  {
    std::lock_guard lock(memo.mu);
    if (memo.values && memo.values->size() >= count) return memo.values;
  }
  std::vector<Rational> out;
  if (impl_->prefix) {
    out = impl_->prefix(count);
  } else {
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(impl_->gen(n));
  }
  auto view = std::make_shared<const std::vector<Rational>>(std::move(out));
  if (count <= kMemoCap && !impl_->constant) {
    std::lock_guard lock(memo.mu);
    if (!memo.values || memo.values->size() < count) memo.values = view;
  }
  return view;
}

std::vector<Rational> Hyperreal::prefix(std::size_t count) const {
  if (impl_->constant) return std::vector<Rational>(count, *impl_->constant);
  auto view = prefix_view(count);
  return {view->begin(), view->begin() + static_cast<std::ptrdiff_t>(count)};
}

const std::string& Hyperreal::label() const { return impl_->label; }
FormKind Hyperreal::form() const { return impl_->form; }
const std::optional<Rational>& Hyperreal::constant_value() const { return impl_->constant; }
bool Hyperreal::has_modulus() const { return static_cast<bool>(impl_->modulus); }

Rational Hyperreal::modulus(std::size_t n) const {
  if (!impl_->modulus) throw Error(ErrorCode::kConvergenceUnknown, "no modulus for " + label());
  return impl_->modulus(n);
}

Hyperreal Hyperreal::with_label(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  return Hyperreal(std::move(impl));
}

Hyperreal Hyperreal::with_modulus(Modulus modulus) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->modulus = std::move(modulus);
  return Hyperreal(std::move(impl));
}

Hyperreal make(const Rational& q) { return Hyperreal::constant(q); }
Hyperreal make(Builtin which) { return Hyperreal::builtin(which); }
Hyperreal make(Hyperreal::Generator gen, std::string label) {
  return Hyperreal::from_generator(std::move(gen), std::move(label));
}

Hyperreal omega() {
  static const Hyperreal w = Hyperreal::builtin(Builtin::kOmega);
  return w;
}
Hyperreal harmonic() {
  static const Hyperreal e = Hyperreal::builtin(Builtin::kHarmonic);
  return e;
}
Hyperreal reciprocal_succ() {
  static const Hyperreal r = Hyperreal::builtin(Builtin::kReciprocalSucc);
  return r;
}

namespace {

FormKind combine_form(const Hyperreal& a, const Hyperreal& b) {
  if (a.form() == FormKind::kOpaque || b.form() == FormKind::kOpaque) return FormKind::kOpaque;
  return FormKind::kRationalFunction;
}

// Binary kernels have the mpq_add(dst, x, y) shape. A constant operand is
// applied as a scalar instead of being expanded.
template <typename Op>
Hyperreal pointwise2(const Hyperreal& a, const Hyperreal& b, Op op, std::string label,
                     Hyperreal::Modulus modulus) {
  return Hyperreal::from_generators(
      [a, b, op](std::size_t n) {
        Rational out;
        op(out.get_mpq_t(), a.at(n).get_mpq_t(), b.at(n).get_mpq_t());
        return out;
      },
      [a, b, op](std::size_t count) {
        std::vector<Rational> out(count);
        if (b.is_constant()) {
          auto va = a.prefix_view(count);
          const Rational& c = *b.constant_value();
          for (std::size_t i = 0; i < count; ++i) op(out[i].get_mpq_t(), (*va)[i].get_mpq_t(), c.get_mpq_t());
        } else if (a.is_constant()) {
          auto vb = b.prefix_view(count);
          const Rational& c = *a.constant_value();
          for (std::size_t i = 0; i < count; ++i) op(out[i].get_mpq_t(), c.get_mpq_t(), (*vb)[i].get_mpq_t());
        } else {
          auto va = a.prefix_view(count);
          auto vb = b.prefix_view(count);
          for (std::size_t i = 0; i < count; ++i)
            op(out[i].get_mpq_t(), (*va)[i].get_mpq_t(), (*vb)[i].get_mpq_t());
        }
        return out;
      },
      std::move(label), combine_form(a, b), std::move(modulus));
}

// Unary kernels have the mpq_neg(dst, x) shape.
template <typename Op>
Hyperreal pointwise1(const Hyperreal& a, Op op, std::string label, Hyperreal::Modulus modulus) {
  FormKind form = a.form() == FormKind::kOpaque ? FormKind::kOpaque : FormKind::kRationalFunction;
  return Hyperreal::from_generators(
      [a, op](std::size_t n) {
        Rational v;
        op(v.get_mpq_t(), a.at(n).get_mpq_t());
        return v;
      },
      [a, op](std::size_t count) {
        auto va = a.prefix_view(count);
        std::vector<Rational> out(count);
        for (std::size_t i = 0; i < count; ++i) op(out[i].get_mpq_t(), (*va)[i].get_mpq_t());
        return out;
      },
      std::move(label), form, std::move(modulus));
}

Rational rabs(const Rational& q) { return nsreal::abs(q); }

}  // namespace

Hyperreal add(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_constant() && b.is_constant()) return make(*a.constant_value() + *b.constant_value());
  Hyperreal::Modulus m;
  if (a.has_modulus() && b.has_modulus())
    m = [a, b](std::size_t n) { return Rational(a.modulus(n) + b.modulus(n)); };
  return pointwise2(a, b, mpq_add,
                    "(" + a.label() + "+" + b.label() + ")", std::move(m));
}

Hyperreal sub(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_constant() && b.is_constant()) return make(*a.constant_value() - *b.constant_value());
  Hyperreal::Modulus m;
  if (a.has_modulus() && b.has_modulus())
    m = [a, b](std::size_t n) { return Rational(a.modulus(n) + b.modulus(n)); };
  return pointwise2(a, b, mpq_sub,
                    "(" + a.label() + "-" + b.label() + ")", std::move(m));
}

Hyperreal mul(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_constant() && b.is_constant()) return make(*a.constant_value() * *b.constant_value());
  Hyperreal::Modulus m;
  if (a.has_modulus() && b.has_modulus()) {
    // |ab - AB| <= |a||b - B| + |B||a - A|, with |B| <= |b| + mod_b.
    m = [a, b](std::size_t n) {
      Rational mb = b.modulus(n);
      return Rational(rabs(a.at(n)) * mb + (rabs(b.at(n)) + mb) * a.modulus(n));
    };
  }
  std::string label;
  if (a.is_constant()) label = a.label() + "*" + b.label();
  else label = "(" + a.label() + "*" + b.label() + ")";
  return pointwise2(a, b, mpq_mul,
                    std::move(label), std::move(m));
}

Hyperreal tilde_inv(const Hyperreal& a) {
  auto inv = [](const Rational& x) { return x == 0 ? Rational(0) : Rational(1 / x); };
  if (a.is_constant()) return make(inv(*a.constant_value()));
  return pointwise1(
      a, [](mpq_ptr v, mpq_srcptr x) {
        if (mpq_sgn(x) != 0) mpq_inv(v, x);
      }, "~" + a.label(), {});
}

Hyperreal abs(const Hyperreal& a) {
  if (a.is_constant()) return make(rabs(*a.constant_value()));
  Hyperreal::Modulus m;
  if (a.has_modulus()) m = [a](std::size_t n) { return a.modulus(n); };
  return pointwise1(a, mpq_abs, "|" + a.label() + "|", std::move(m));
}

Hyperreal neg(const Hyperreal& a) {
  if (a.is_constant()) return make(-*a.constant_value());
  Hyperreal::Modulus m;
  if (a.has_modulus()) m = [a](std::size_t n) { return a.modulus(n); };
  return pointwise1(a, mpq_neg, "-" + a.label(), std::move(m));
}

Hyperreal arith(ArithOp op, const Hyperreal& a, const std::optional<Hyperreal>& b) {
  auto need_b = [&]() -> const Hyperreal& {
    if (!b) throw Error(ErrorCode::kInvalidArgument, "binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::kAdd: return add(a, need_b());
    case ArithOp::kSub: return sub(a, need_b());
    case ArithOp::kMul: return mul(a, need_b());
    case ArithOp::kTildeInv: return tilde_inv(a);
    case ArithOp::kAbs: return abs(a);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown operation");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kLess: return "Less";
    case Verdict::kGreater: return "Greater";
    case Verdict::kEqual: return "Equal";
    case Verdict::kUndetermined: return "Undetermined";
  }
  return "?";
}

std::string_view class_tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::kInfinitesimal: return "Infinitesimal";
    case ClassTag::kAppreciable: return "Appreciable";
    case ClassTag::kUnlimited: return "Unlimited";
    case ClassTag::kUndetermined: return "Undetermined";
  }
  return "?";
}

std::string_view arch_class_name(ArchClass c) {
  switch (c) {
    case ArchClass::kSameClass: return "SameClass";
    case ArchClass::kLowerClass: return "LowerClass";
    case ArchClass::kHigherClass: return "HigherClass";
    case ArchClass::kUndetermined: return "Undetermined";
  }
  return "?";
}

namespace {

void require_depth(std::size_t depth) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "depth must be >= 1");
}

// Smallest w such that pred holds on every index of [w, end-1].
template <typename T, typename Pred>
std::size_t suffix_start(const std::vector<T>& values, std::size_t end, Pred pred) {
  std::size_t w = end;
  while (w > 0 && pred(values[w - 1])) --w;
  return w;
}

template <typename Pred>
bool eventually(const std::vector<Rational>& values, std::size_t depth, Pred pred) {
  return suffix_start(values, depth + 1, pred) <= depth / 2;
}

Rational window_max(const std::vector<Rational>& v, std::size_t lo, std::size_t hi) {
  return *std::max_element(v.begin() + lo, v.begin() + hi + 1);
}

Rational window_min(const std::vector<Rational>& v, std::size_t lo, std::size_t hi) {
  return *std::min_element(v.begin() + lo, v.begin() + hi + 1);
}

}  // namespace

CompareResult compare(const Hyperreal& a, const Hyperreal& b, std::size_t depth) {
  require_depth(depth);
  if (a.is_constant() && b.is_constant()) {
    int s = cmp(*a.constant_value(), *b.constant_value());
    return {s < 0 ? Verdict::kLess : s > 0 ? Verdict::kGreater : Verdict::kEqual, 0};
  }
  std::vector<int> signs(depth + 1);
  if (b.is_constant()) {
    auto va = a.prefix_view(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) signs[i] = cmp((*va)[i], *b.constant_value());
  } else if (a.is_constant()) {
    auto vb = b.prefix_view(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) signs[i] = cmp(*a.constant_value(), (*vb)[i]);
  } else {
    auto va = a.prefix_view(depth + 1);
    auto vb = b.prefix_view(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) signs[i] = cmp((*va)[i], (*vb)[i]);
  }
  int last = signs[depth];
  std::size_t w = suffix_start(signs, depth + 1, [last](int s) { return s == last; });
  if (w > depth / 2) return {};
  Verdict v = last < 0 ? Verdict::kLess : last > 0 ? Verdict::kGreater : Verdict::kEqual;
  return {v, w};
}

int sign(const Hyperreal& a, std::size_t depth) {
  auto r = compare(a, make(0), depth);
  switch (r.verdict) {
    case Verdict::kLess: return -1;
    case Verdict::kGreater: return 1;
    case Verdict::kEqual: return 0;
    case Verdict::kUndetermined: break;
  }
  throw Error(ErrorCode::kSignUndetermined, "sign of " + a.label() + " at depth " +
                                                std::to_string(depth));
}

std::optional<Rational> eventual_constant(const Hyperreal& a, std::size_t depth) {
  require_depth(depth);
  if (a.is_constant()) return a.constant_value();
  auto view = a.prefix_view(depth + 1);
  const auto& v = *view;
  const Rational& last = v[depth];
  if (eventually(v, depth, [&](const Rational& x) { return x == last; })) return last;
  return std::nullopt;
}

ClassTag classify(const Hyperreal& a, std::size_t depth, std::size_t probes) {
  require_depth(depth);
  if (probes == 0) throw Error(ErrorCode::kInvalidArgument, "probe budget must be >= 1");
  if (a.is_constant())
    return *a.constant_value() == 0 ? ClassTag::kInfinitesimal : ClassTag::kAppreciable;
  auto view = a.prefix_view(depth + 1);
  if (std::any_of(view->begin(), view->begin() + static_cast<std::ptrdiff_t>(depth + 1),
                  [](const Rational& x) { return sgn(x) < 0; }))
    view = abs(a).prefix_view(depth + 1);
  const auto& v = *view;
  const Rational last = v[depth];
  if (eventually(v, depth, [&](const Rational& x) { return x == last; }))
    return last == 0 ? ClassTag::kInfinitesimal : ClassTag::kAppreciable;

  // Trend windows: head = [depth/8, depth/4], tail = [depth/2, depth].
  std::size_t h0 = depth / 8, h1 = depth / 4, t0 = depth / 2;
  Rational sup_tail = window_max(v, t0, depth), sup_head = window_max(v, h0, h1);
  Rational inf_tail = window_min(v, t0, depth), inf_head = window_min(v, h0, h1);
  bool decaying = 2 * sup_tail <= sup_head;
  bool growing = inf_tail > 0 && inf_tail >= 2 * inf_head;

  Rational small(1, static_cast<unsigned long>(probes));
  Rational big(static_cast<unsigned long>(probes));
  // Every probe 1/m (m <= probes) is implied by the smallest one.
  if (decaying && eventually(v, depth, [&](const Rational& x) { return x < small; }))
    return ClassTag::kInfinitesimal;
  if (growing && eventually(v, depth, [&](const Rational& x) { return x > big; }))
    return ClassTag::kUnlimited;
  if (inf_tail > 0 && !decaying && !growing) {
    Rational spread_tail = sup_tail - inf_tail, spread_head = sup_head - inf_head;
    bool settling = 2 * spread_tail <= spread_head;
    if (settling || sup_tail <= sup_head) return ClassTag::kAppreciable;
  }
  return ClassTag::kUndetermined;
}

Interval shadow(const Hyperreal& a, const Rational& tolerance, std::size_t depth) {
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (a.is_constant()) return Interval::point(*a.constant_value());
  if (a.has_modulus()) {
    std::size_t n = 0;
    constexpr std::size_t kCap = std::size_t{1} << 40;
    while (a.modulus(n) > tolerance) {
      if (n > kCap) throw Error(ErrorCode::kNotConvergentAtDepth, a.label());
      n = 2 * n + 1;
    }
    Rational m = a.modulus(n), x = a.at(n);
    return {x - m, x + m};
  }
  if (classify(a, depth) == ClassTag::kUnlimited)
    throw Error(ErrorCode::kUnlimited, a.label() + " has no shadow");
  auto view = a.prefix_view(depth + 1);
  const auto& v = *view;
  Rational lo = v[depth], hi = v[depth];
  std::size_t w = depth;
  while (w > 0) {
    Rational nlo = std::min(lo, v[w - 1]), nhi = std::max(hi, v[w - 1]);
    if (nhi - nlo > tolerance) break;
    lo = nlo;
    hi = nhi;
    --w;
  }
  if (w > depth / 2)
    throw Error(ErrorCode::kNotConvergentAtDepth,
                a.label() + " has no Cauchy window at depth " + std::to_string(depth));
  return {hi - tolerance, lo + tolerance};
}

namespace {

// Remembered archimedean comparisons of long-lived pairs such as idempotent
// scales. The weak handles detect a key address that was freed and reused.
struct ArchMemo {
  struct Entry {
    std::weak_ptr<const void> a, b;
    ArchClass result;
  };
  std::mutex mu;
  std::map<std::tuple<const void*, const void*, std::size_t>, Entry> entries;
};

ArchMemo& arch_memo() {
  static ArchMemo memo;
  return memo;
}

ArchClass arch_class_cmp_uncached(const Hyperreal& a, const Hyperreal& b, std::size_t depth);

}  // namespace

ArchClass arch_class_cmp(const Hyperreal& a, const Hyperreal& b, std::size_t depth) {
  require_depth(depth);
  auto ia = a.identity(), ib = b.identity();
  auto key = std::make_tuple(ia.lock().get(), ib.lock().get(), depth);
  auto& memo = arch_memo();
  {
    std::lock_guard lock(memo.mu);
    auto it = memo.entries.find(key);
    if (it != memo.entries.end()) {
      const auto& e = it->second;
      if (!e.a.owner_before(ia) && !ia.owner_before(e.a) && !e.b.owner_before(ib) &&
          !ib.owner_before(e.b) && !e.a.expired() && !e.b.expired())
        return e.result;
    }
  }
  ArchClass result = arch_class_cmp_uncached(a, b, depth);
  std::lock_guard lock(memo.mu);
  if (memo.entries.size() >= 4096) memo.entries.clear();
  memo.entries[key] = {ia, ib, result};
  return result;
}

namespace {

ArchClass arch_class_cmp_uncached(const Hyperreal& a, const Hyperreal& b, std::size_t depth) {
  auto zero_tail = [depth](const Hyperreal& x) {
    if (x.is_constant()) return *x.constant_value() == 0;
    auto v = x.prefix_view(depth + 1);
    return std::all_of(v->begin() + depth / 2, v->begin() + depth + 1,
                       [](const Rational& q) { return q == 0; });
  };
  if (zero_tail(a) || (!a.same_as(b) && zero_tail(b)))
    throw Error(ErrorCode::kZeroTailAtDepth, a.label() + " vs " + b.label());
  if (a.same_as(b)) return ArchClass::kSameClass;
  switch (classify(abs(a) * tilde_inv(abs(b)), depth)) {
    case ClassTag::kInfinitesimal: return ArchClass::kLowerClass;
    case ClassTag::kUnlimited: return ArchClass::kHigherClass;
    case ClassTag::kAppreciable: return ArchClass::kSameClass;
    case ClassTag::kUndetermined: break;
  }
  return ArchClass::kUndetermined;
}

}  // namespace

Hyperinteger::Hyperinteger() : Hyperinteger(constant(0)) {}

Hyperinteger::Hyperinteger(Generator gen, std::string label)
    : gen_(std::move(gen)), label_(std::make_shared<const std::string>(std::move(label))) {}

Hyperinteger Hyperinteger::constant(const Integer& z) {
  return Hyperinteger([z](std::size_t) { return z; }, z.get_str());
}

Hyperinteger Hyperinteger::from_generator(Generator gen, std::string label) {
  return Hyperinteger(std::move(gen), std::move(label));
}

std::vector<Integer> Hyperinteger::prefix(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(gen_(n));
  return out;
}

Hyperreal Hyperinteger::to_hyperreal() const {
  auto gen = gen_;
  return Hyperreal::from_generator([gen](std::size_t n) { return Rational(gen(n)); }, label());
}

Hyperinteger floor(const Hyperreal& a) {
  return Hyperinteger::from_generator(
      [a](std::size_t n) {
        Rational q = a.at(n);
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return f;
      },
      "floor(" + a.label() + ")");
}

IndexPredicate divides(const Hyperinteger& a, const Hyperinteger& d) {
  return [a, d](std::size_t n) {
    Integer x = a.at(n), y = d.at(n);
    if (x == 0) return y == 0;
    return mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) != 0;
  };
}

DivRem div_rem(const Hyperinteger& a, const Hyperinteger& d) {
  auto check = [d](std::size_t n) {
    Integer dv = d.at(n);
    if (dv == 0)
      throw Error(ErrorCode::kDivisionByZeroAtIndex, "divisor is zero at index " + std::to_string(n));
    return dv;
  };
  auto quotient = Hyperinteger::from_generator(
      [a, check](std::size_t n) {
        Integer dv = check(n), q, r;
        Integer x = a.at(n);
        // Euclidean convention: 0 <= r < |d|.
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), dv.get_mpz_t());
        if (r < 0) {
          r -= dv;
          q += 1;
        }
        return q;
      },
      "quot(" + a.label() + "," + d.label() + ")");
  auto remainder = Hyperinteger::from_generator(
      [a, check](std::size_t n) {
        Integer dv = check(n), r;
        Integer x = a.at(n);
        Integer adv = ::abs(dv);
        mpz_mod(r.get_mpz_t(), x.get_mpz_t(), adv.get_mpz_t());
        return r;
      },
      "rem(" + a.label() + "," + d.label() + ")");
  return {quotient, remainder};
}

GcdResult gcd(const Hyperinteger& a, const Hyperinteger& b) {
  auto ext = [a, b](std::size_t n) {
    Integer g, s, t, x = a.at(n), y = b.at(n);
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return std::array<Integer, 3>{g, s, t};
  };
  std::string tag = "(" + a.label() + "," + b.label() + ")";
  return {Hyperinteger::from_generator([ext](std::size_t n) { return ext(n)[0]; }, "gcd" + tag),
          Hyperinteger::from_generator([ext](std::size_t n) { return ext(n)[1]; }, "bezout_s" + tag),
          Hyperinteger::from_generator([ext](std::size_t n) { return ext(n)[2]; }, "bezout_t" + tag)};
}

}  // namespace nsreal::seqfield
