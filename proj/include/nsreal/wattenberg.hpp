// Canonical-form fragment of the Dedekind completion of the hyperreals.
//
// A DedekindNumber is h# + sign * delta, where h is a hyperreal, delta an
// additive idempotent (ZERO, B(a) = a * eps_d, A(a) = a * DELTA_d) and
// sign in {-1, 0, +1}. sign = +1 is the type-1 form, sign = -1 type 1A,
// sign = 0 the embedded internal cut h#.
//
// Idempotents are identified up to archimedean class of their scale, so every
// relation here inherits the cofinite-proxy depth and can be Undetermined.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nsreal/common.hpp"
#include "nsreal/seqfield.hpp"

namespace nsreal::wattenberg {

using seqfield::CompareResult;
using seqfield::Hyperreal;
using seqfield::Verdict;

enum class IdemKind { kZero, kB, kA };

class Idempotent {
 public:
  /// ZERO.
  Idempotent();

  static Idempotent zero() { return Idempotent(); }
  /// B(a): the largest idempotent not containing a. Requires a > 0.
  static Idempotent B(const Hyperreal& scale, std::size_t depth = kDefaultDepth);
  /// A(a): the smallest idempotent containing a. Requires a > 0.
  static Idempotent A(const Hyperreal& scale, std::size_t depth = kDefaultDepth);
  /// eps_d = B(1), the supremum of the infinitesimals.
  static Idempotent eps_d();
  /// DELTA_d = A(1), the supremum of the standard reals.
  static Idempotent delta_d();

  IdemKind kind() const { return kind_; }
  bool is_zero() const { return kind_ == IdemKind::kZero; }
  /// Scale of a B/A idempotent; throws for ZERO.
  const Hyperreal& scale() const;
  /// Pointwise ~|scale|.
  const Hyperreal& inverse_scale() const;

  /// Same kind with scale multiplied by |factor|. ZERO stays ZERO.
  Idempotent scaled(const Hyperreal& factor, std::size_t depth = kDefaultDepth) const;

  /// "eps_d", "DELTA_d", "B(<label>)", "A(<label>)" or "0".
  std::string to_string() const;

 private:
  Idempotent(IdemKind kind, Hyperreal scale);
  IdemKind kind_;
  std::optional<Hyperreal> scale_;
  std::optional<Hyperreal> inv_scale_;
};

/// Order ZERO < B(a) < A(a); scales compared by archimedean class.
/// Returns -1/0/+1; throws kClassUndetermined.
int idem_compare(const Idempotent& a, const Idempotent& b, std::size_t depth = kDefaultDepth);
bool idem_equal(const Idempotent& a, const Idempotent& b, std::size_t depth = kDefaultDepth);
/// Class maximum.
Idempotent idem_add(const Idempotent& a, const Idempotent& b, std::size_t depth = kDefaultDepth);

/// True when the hyperreal d lies inside the idempotent (|d| is absorbed).
bool absorbed_by(const Hyperreal& d, const Idempotent& delta, std::size_t depth = kDefaultDepth);

class DedekindNumber {
 public:
  /// The zero cut 0#.
  DedekindNumber();
  /// Requires sign = 0 exactly when delta is ZERO.
  DedekindNumber(Hyperreal h, int sign, Idempotent delta);

  static DedekindNumber embed(const Hyperreal& h) { return {h, 0, Idempotent()}; }
  static DedekindNumber plus(const Hyperreal& h, const Idempotent& d) { return {h, 1, d}; }
  static DedekindNumber minus(const Hyperreal& h, const Idempotent& d) { return {h, -1, d}; }

  const Hyperreal& h() const { return h_; }
  int sign() const { return sign_; }
  const Idempotent& delta() const { return delta_; }

  /// "<h>#", "<h># + eps_d", "<h># - B(<label>)", ...
  std::string to_string() const;

 private:
  Hyperreal h_;
  int sign_;
  Idempotent delta_;
};

DedekindNumber dd_embed(const Hyperreal& h);
DedekindNumber dd_add(const DedekindNumber& a, const DedekindNumber& b,
                      std::size_t depth = kDefaultDepth);
DedekindNumber dd_neg(const DedekindNumber& a);
/// b# x alpha for a hyperreal scalar b of decidable, nonzero sign.
DedekindNumber dd_scalar_mul(const Hyperreal& b, const DedekindNumber& a,
                             std::size_t depth = kDefaultDepth);
/// Absorption part.
Idempotent ab_p(const DedekindNumber& a);
/// a + b == a.
bool absorbs(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth = kDefaultDepth);
/// Equality of canonical forms up to absorption.
bool dd_equal(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth = kDefaultDepth);
CompareResult dd_cmp(const DedekindNumber& a, const DedekindNumber& b,
                     std::size_t depth = kDefaultDepth);
/// Standard-part interval of width <= 2*tolerance.
Interval wst(const DedekindNumber& a, const Rational& tolerance, std::size_t depth = kDefaultDepth);
/// Projection of the floor into the embedded hyperintegers.
DedekindNumber dd_floor(const DedekindNumber& a);

/// Restricted-to-nonnegative eps-part a#+ + (eps*scale)-idempotent+.
struct EpsPartForm {
  DedekindNumber base;
  Hyperreal eps_scale;
  bool nonneg_restricted = true;

  std::string to_string() const;
};

EpsPartForm eps_part(const DedekindNumber& a, const Hyperreal& eps,
                     std::size_t depth = kDefaultDepth);
/// M x [alpha]_eps: M x a#+ + (eps*M)-scaled idempotent. Requires M > 0.
EpsPartForm eps_part_scale(const Hyperreal& m, const EpsPartForm& form,
                           std::size_t depth = kDefaultDepth);

enum class Relation { kR, kS, kT };

/// R: a + D == b + D.  S: a + (-D) == b + (-D).
/// T: some d inside D with a <= b + d and b <= a + d.
bool rel_RST(Relation kind, const DedekindNumber& a, const DedekindNumber& b,
             const Idempotent& delta, std::size_t depth = kDefaultDepth);

/// Evaluates `term (('+'|'-') term)*` with term := rational '#' | eps_d | DELTA_d.
DedekindNumber evaluate_expression(std::string_view expr, std::size_t depth = kDefaultDepth);

}  // namespace nsreal::wattenberg
