// Hyperreals and hyperintegers modelled as lazy exact sequences.
//
// Comparison uses the cofinite (Frechet) filter as a computable stand-in for
// a free ultrafilter: a verdict is returned only when the sign of the
// difference is constant on a suffix [w, depth] with w <= depth / 2.
// Everything else is Undetermined.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nsreal/common.hpp"

namespace nsreal::seqfield {

enum class FormKind { kConstant, kRationalFunction, kOpaque };

enum class Builtin {
  kOmega,           // (1, 2, 3, ...)
  kHarmonic,        // partial harmonic sums (1, 3/2, 11/6, ...)
  kReciprocalSucc,  // (1, 1/2, 1/3, ...)
};

class Hyperreal {
 public:
  using Generator = std::function<Rational(std::size_t)>;
  using PrefixGenerator = std::function<std::vector<Rational>(std::size_t)>;
  /// Certified convergence modulus: |a(n) - lim a| <= modulus(n) for all n.
  using Modulus = std::function<Rational(std::size_t)>;

  /// The zero constant.
  Hyperreal();

  static Hyperreal constant(const Rational& q);
  static Hyperreal builtin(Builtin which);
  static Hyperreal from_generator(Generator gen, std::string label,
                                  FormKind form = FormKind::kOpaque,
                                  Modulus modulus = {});
  /// As from_generator, with a fast path for evaluating whole prefixes.
  static Hyperreal from_generators(Generator gen, PrefixGenerator prefix,
                                   std::string label,
                                   FormKind form = FormKind::kOpaque,
                                   Modulus modulus = {});

  Rational at(std::size_t n) const;
  Rational operator()(std::size_t n) const { return at(n); }
  /// Values at indices 0 .. count-1.
  std::vector<Rational> prefix(std::size_t count) const;
  using PrefixView = std::shared_ptr<const std::vector<Rational>>;
  /// Shared, possibly longer, prefix; short prefixes are remembered.
  PrefixView prefix_view(std::size_t count) const;

  const std::string& label() const;
  FormKind form() const;
  const std::optional<Rational>& constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  /// True when both handles share one underlying sequence.
  bool same_as(const Hyperreal& other) const { return impl_ == other.impl_; }
  /// Handle identifying the underlying sequence without keeping it alive.
  std::weak_ptr<const void> identity() const { return impl_; }

  bool has_modulus() const;
  Rational modulus(std::size_t n) const;

  Hyperreal with_label(std::string label) const;
  Hyperreal with_modulus(Modulus modulus) const;

 private:
  struct Impl;
  explicit Hyperreal(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

Hyperreal make(const Rational& q);
inline Hyperreal make(long q) { return make(Rational(q)); }
Hyperreal make(Builtin which);
Hyperreal make(Hyperreal::Generator gen, std::string label = "gen");

Hyperreal omega();
Hyperreal harmonic();
Hyperreal reciprocal_succ();

enum class ArithOp { kAdd, kSub, kMul, kTildeInv, kAbs };

/// Pointwise arithmetic. Binary ops require `b`; unary ops ignore it.
Hyperreal arith(ArithOp op, const Hyperreal& a,
                const std::optional<Hyperreal>& b = std::nullopt);

Hyperreal add(const Hyperreal& a, const Hyperreal& b);
Hyperreal sub(const Hyperreal& a, const Hyperreal& b);
Hyperreal mul(const Hyperreal& a, const Hyperreal& b);
/// Zero terms stay zero, nonzero terms are inverted.
Hyperreal tilde_inv(const Hyperreal& a);
Hyperreal abs(const Hyperreal& a);
Hyperreal neg(const Hyperreal& a);

inline Hyperreal operator+(const Hyperreal& a, const Hyperreal& b) { return add(a, b); }
inline Hyperreal operator-(const Hyperreal& a, const Hyperreal& b) { return sub(a, b); }
inline Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) { return mul(a, b); }
inline Hyperreal operator-(const Hyperreal& a) { return neg(a); }

enum class Verdict { kLess, kGreater, kEqual, kUndetermined };

struct CompareResult {
  Verdict verdict = Verdict::kUndetermined;
  std::optional<std::size_t> witness;

  bool decided() const { return verdict != Verdict::kUndetermined; }
  friend bool operator==(const CompareResult&, const CompareResult&) = default;
};

std::string_view verdict_name(Verdict v);

CompareResult compare(const Hyperreal& a, const Hyperreal& b,
                      std::size_t depth = kDefaultDepth);

/// Sign of `a` under the cofinite proxy; throws kSignUndetermined.
int sign(const Hyperreal& a, std::size_t depth = kDefaultDepth);

enum class ClassTag { kInfinitesimal, kAppreciable, kUnlimited, kUndetermined };

std::string_view class_tag_name(ClassTag t);

ClassTag classify(const Hyperreal& a, std::size_t depth = kDefaultDepth,
                  std::size_t probes = kProbeBudget);

/// Value the sequence settles on over [depth/2, depth], if any.
std::optional<Rational> eventual_constant(const Hyperreal& a,
                                          std::size_t depth = kDefaultDepth);

/// Interval of width <= 2*tolerance around the limit. A certified modulus is
/// used when the hyperreal carries one; otherwise a Cauchy window inside the
/// inspected depth.
Interval shadow(const Hyperreal& a, const Rational& tolerance,
                std::size_t depth = kDefaultDepth);

enum class ArchClass { kSameClass, kLowerClass, kHigherClass, kUndetermined };

std::string_view arch_class_name(ArchClass c);

/// Archimedean class comparison: a ~ b when a/b and b/a are both finite.
ArchClass arch_class_cmp(const Hyperreal& a, const Hyperreal& b,
                         std::size_t depth = kDefaultDepth);

class Hyperinteger {
 public:
  using Generator = std::function<Integer(std::size_t)>;

  Hyperinteger();
  static Hyperinteger constant(const Integer& z);
  static Hyperinteger from_generator(Generator gen, std::string label = "gen");

  Integer at(std::size_t n) const { return gen_(n); }
  Integer operator()(std::size_t n) const { return gen_(n); }
  std::vector<Integer> prefix(std::size_t count) const;
  const std::string& label() const { return *label_; }

  /// Lossless embedding into the hyperreals.
  Hyperreal to_hyperreal() const;

 private:
  Hyperinteger(Generator gen, std::string label);
  Generator gen_;
  std::shared_ptr<const std::string> label_;
};

/// Componentwise floor: n(i) <= a(i) < n(i) + 1.
Hyperinteger floor(const Hyperreal& a);

using IndexPredicate = std::function<bool(std::size_t)>;

/// divides(a, d)(i) is true iff a(i) divides d(i).
IndexPredicate divides(const Hyperinteger& a, const Hyperinteger& d);

struct DivRem {
  Hyperinteger quotient;
  Hyperinteger remainder;  // 0 <= remainder(i) < |d(i)|
};

/// Euclidean division; evaluation throws kDivisionByZeroAtIndex where d(i) = 0.
DivRem div_rem(const Hyperinteger& a, const Hyperinteger& d);

struct GcdResult {
  Hyperinteger gcd;
  Hyperinteger s;  // gcd = s*a + t*b at every index
  Hyperinteger t;
};

GcdResult gcd(const Hyperinteger& a, const Hyperinteger& b);

}  // namespace nsreal::seqfield
