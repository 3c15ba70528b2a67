#include "nsreal/wattenberg.hpp"

#include <cctype>
#include <utility>

namespace nsreal::wattenberg {

namespace sf = seqfield;

namespace {

Error undetermined(const std::string& what) {
  return Error(ErrorCode::kClassUndetermined, what);
}

bool is_constant_one(const Hyperreal& h) {
  return h.is_constant() && *h.constant_value() == 1;
}

Hyperreal require_positive(const Hyperreal& scale, std::size_t depth) {
  if (scale.is_constant()) {
    if (*scale.constant_value() <= 0)
      throw Error(ErrorCode::kInvalidArgument, "idempotent scale must be positive");
    return scale;
  }
  if (sf::compare(scale, sf::make(0), depth).verdict != Verdict::kGreater)
    throw Error(ErrorCode::kInvalidArgument,
                "idempotent scale " + scale.label() + " is not positive at depth");
  return scale;
}

}  // namespace

Idempotent::Idempotent() : kind_(IdemKind::kZero) {}

Idempotent::Idempotent(IdemKind kind, Hyperreal scale)
    : kind_(kind), scale_(std::move(scale)), inv_scale_(sf::tilde_inv(sf::abs(*scale_))) {}

Idempotent Idempotent::B(const Hyperreal& scale, std::size_t depth) {
  return Idempotent(IdemKind::kB, require_positive(scale, depth));
}

Idempotent Idempotent::A(const Hyperreal& scale, std::size_t depth) {
  return Idempotent(IdemKind::kA, require_positive(scale, depth));
}

Idempotent Idempotent::eps_d() { return Idempotent(IdemKind::kB, sf::make(1)); }
Idempotent Idempotent::delta_d() { return Idempotent(IdemKind::kA, sf::make(1)); }

const Hyperreal& Idempotent::inverse_scale() const {
  if (!inv_scale_) throw Error(ErrorCode::kInvalidArgument, "ZERO idempotent has no scale");
  return *inv_scale_;
}

const Hyperreal& Idempotent::scale() const {
  if (!scale_) throw Error(ErrorCode::kInvalidArgument, "ZERO idempotent has no scale");
  return *scale_;
}

Idempotent Idempotent::scaled(const Hyperreal& factor, std::size_t depth) const {
  if (is_zero()) return *this;
  Hyperreal s = sf::abs(factor) * *scale_;
  return Idempotent(kind_, require_positive(s, depth));
}

std::string Idempotent::to_string() const {
  switch (kind_) {
    case IdemKind::kZero: return "0";
    case IdemKind::kB: return is_constant_one(*scale_) ? "eps_d" : "B(" + scale_->label() + ")";
    case IdemKind::kA: return is_constant_one(*scale_) ? "DELTA_d" : "A(" + scale_->label() + ")";
  }
  return "?";
}

int idem_compare(const Idempotent& a, const Idempotent& b, std::size_t depth) {
  if (a.is_zero() || b.is_zero()) return static_cast<int>(!a.is_zero()) - static_cast<int>(!b.is_zero());
  auto kind_order = [](IdemKind k) { return k == IdemKind::kB ? 0 : 1; };
  switch (sf::arch_class_cmp(a.scale(), b.scale(), depth)) {
    case sf::ArchClass::kLowerClass: return -1;
    case sf::ArchClass::kHigherClass: return 1;
    case sf::ArchClass::kSameClass: return kind_order(a.kind()) - kind_order(b.kind());
    case sf::ArchClass::kUndetermined: break;
  }
  throw undetermined(a.to_string() + " vs " + b.to_string());
}

bool idem_equal(const Idempotent& a, const Idempotent& b, std::size_t depth) {
  return idem_compare(a, b, depth) == 0;
}

Idempotent idem_add(const Idempotent& a, const Idempotent& b, std::size_t depth) {
  return idem_compare(a, b, depth) >= 0 ? a : b;
}

bool absorbed_by(const Hyperreal& d, const Idempotent& delta, std::size_t depth) {
  if (delta.is_zero()) {
    auto r = sf::compare(d, sf::make(0), depth);
    if (!r.decided()) throw undetermined(d.label() + " = 0");
    return r.verdict == Verdict::kEqual;
  }
  auto ratio = sf::abs(d) * delta.inverse_scale();
  switch (sf::classify(ratio, depth)) {
    case sf::ClassTag::kInfinitesimal: return true;
    case sf::ClassTag::kAppreciable: return delta.kind() == IdemKind::kA;
    case sf::ClassTag::kUnlimited: return false;
    case sf::ClassTag::kUndetermined: break;
  }
  throw undetermined(d.label() + " in " + delta.to_string());
}

DedekindNumber::DedekindNumber() : h_(sf::make(0)), sign_(0), delta_() {}

DedekindNumber::DedekindNumber(Hyperreal h, int sign, Idempotent delta)
    : h_(std::move(h)), sign_(sign), delta_(std::move(delta)) {
  if (sign_ < -1 || sign_ > 1) throw Error(ErrorCode::kInvalidArgument, "sign must be -1, 0 or +1");
  if ((sign_ == 0) != delta_.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "sign is 0 exactly when the idempotent is ZERO");
}

std::string DedekindNumber::to_string() const {
  std::string out = h_.label() + "#";
  if (sign_ != 0) out += (sign_ > 0 ? " + " : " - ") + delta_.to_string();
  return out;
}

DedekindNumber dd_embed(const Hyperreal& h) { return DedekindNumber::embed(h); }

DedekindNumber dd_add(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth) {
  Hyperreal h = a.h() + b.h();
  int c = idem_compare(a.delta(), b.delta(), depth);
  if (c > 0) return {h, a.sign(), a.delta()};
  if (c < 0) return {h, b.sign(), b.delta()};
  int s = a.sign() == 0 ? 0 : (a.sign() > 0 && b.sign() > 0 ? 1 : -1);
  return {h, s, a.delta()};
}

DedekindNumber dd_neg(const DedekindNumber& a) { return {sf::neg(a.h()), -a.sign(), a.delta()}; }

DedekindNumber dd_scalar_mul(const Hyperreal& b, const DedekindNumber& a, std::size_t depth) {
  int s = sf::sign(b, depth);
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "scalar " + b.label() + " is zero");
  return {b * a.h(), a.sign() * s, a.delta().scaled(b, depth)};
}

Idempotent ab_p(const DedekindNumber& a) { return a.delta(); }

bool absorbs(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth) {
  int c = idem_compare(b.delta(), a.delta(), depth);
  if (c > 0) return false;
  if (!absorbed_by(b.h(), a.delta(), depth)) return false;
  // Same idempotent: h# + D swallows +D but not -D.
  if (c == 0 && a.sign() > 0 && b.sign() < 0) return false;
  return true;
}

bool dd_equal(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth) {
  if (a.sign() != b.sign()) return false;
  if (idem_compare(a.delta(), b.delta(), depth) != 0) return false;
  return absorbed_by(a.h() - b.h(), a.delta(), depth);
}

CompareResult dd_cmp(const DedekindNumber& a, const DedekindNumber& b, std::size_t depth) {
  try {
    const Idempotent& big = idem_add(a.delta(), b.delta(), depth);
    if (!absorbed_by(a.h() - b.h(), big, depth)) return sf::compare(a.h(), b.h(), depth);
    auto verdict = [](int s) {
      return s < 0 ? Verdict::kLess : s > 0 ? Verdict::kGreater : Verdict::kEqual;
    };
    if (a.sign() != b.sign()) return {verdict(a.sign() - b.sign()), 0};
    if (a.sign() == 0) return {Verdict::kEqual, 0};
    int c = idem_compare(a.delta(), b.delta(), depth);
    return {verdict(a.sign() > 0 ? c : -c), 0};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kClassUndetermined) return {};
    throw;
  }
}

Interval wst(const DedekindNumber& a, const Rational& tolerance, std::size_t depth) {
  if (!a.delta().is_zero() && idem_compare(a.delta(), Idempotent::delta_d(), depth) >= 0)
    throw Error(ErrorCode::kOutOfRange, a.to_string() + " is not limited");
  // A certified modulus already bounds the sequence.
  if (!a.h().has_modulus() && sf::classify(a.h(), depth) == sf::ClassTag::kUnlimited)
    throw Error(ErrorCode::kOutOfRange, a.to_string() + " is not limited");
  try {
    return sf::shadow(a.h(), tolerance, depth);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUnlimited) throw Error(ErrorCode::kOutOfRange, e.what());
    throw;
  }
}

DedekindNumber dd_floor(const DedekindNumber& a) {
  Hyperreal h = sf::floor(a.h()).to_hyperreal();
  if (a.h().is_constant()) h = sf::make(h.at(0));
  return dd_embed(h);
}

std::string EpsPartForm::to_string() const {
  std::string out = "[" + base.h().label() + "#]+";
  out += base.sign() > 0 ? " + " : " - ";
  out += base.delta().to_string() + "+";
  return out;
}

EpsPartForm eps_part(const DedekindNumber& a, const Hyperreal& eps, std::size_t depth) {
  if (sf::classify(eps, depth) != sf::ClassTag::kInfinitesimal ||
      sf::compare(eps, sf::make(0), depth).verdict != Verdict::kGreater)
    throw Error(ErrorCode::kNotInfinitesimal, eps.label() + " is not a positive infinitesimal");
  if (a.sign() == 0)
    throw Error(ErrorCode::kInvalidArgument, "eps-part needs a type 1 or 1A number");
  return {DedekindNumber(a.h(), a.sign(), a.delta().scaled(eps, depth)), eps, true};
}

EpsPartForm eps_part_scale(const Hyperreal& m, const EpsPartForm& form, std::size_t depth) {
  if (sf::sign(m, depth) <= 0) throw Error(ErrorCode::kInvalidArgument, "scale must be positive");
  return {dd_scalar_mul(m, form.base, depth), form.eps_scale * m, form.nonneg_restricted};
}

bool rel_RST(Relation kind, const DedekindNumber& a, const DedekindNumber& b,
             const Idempotent& delta, std::size_t depth) {
  if (delta.is_zero()) throw Error(ErrorCode::kInvalidArgument, "relation modulus must be nonzero");
  switch (kind) {
    case Relation::kR: {
      DedekindNumber d = DedekindNumber::plus(sf::make(0), delta);
      return dd_equal(dd_add(a, d, depth), dd_add(b, d, depth), depth);
    }
    case Relation::kS: {
      DedekindNumber d = DedekindNumber::minus(sf::make(0), delta);
      return dd_equal(dd_add(a, d, depth), dd_add(b, d, depth), depth);
    }
    case Relation::kT: {
      Hyperreal diff = a.h() - b.h();
      int ca = idem_compare(a.delta(), delta, depth);
      int cb = idem_compare(b.delta(), delta, depth);
      if (ca < 0 && cb < 0) return absorbed_by(diff, delta, depth);
      if (a.sign() == b.sign() && idem_compare(a.delta(), b.delta(), depth) == 0)
        return absorbed_by(diff, ca >= 0 ? a.delta() : delta, depth);
      return false;
    }
  }
  return false;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t depth) : text_(text), depth_(depth) {}

  DedekindNumber parse() {
    skip_ws();
    int lead = 1;
    if (peek() == '-' || peek() == '+') {
      lead = get() == '-' ? -1 : 1;
      skip_ws();
    }
    DedekindNumber acc = term();
    if (lead < 0) acc = dd_neg(acc);
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_ws();
      DedekindNumber t = term();
      acc = dd_add(acc, op == '+' ? t : dd_neg(t), depth_);
    }
    return acc;
  }

 private:
  DedekindNumber term() {
    if (consume("eps_d")) return DedekindNumber::plus(sf::make(0), Idempotent::eps_d());
    if (consume("DELTA_d")) return DedekindNumber::plus(sf::make(0), Idempotent::delta_d());
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a term");
    Rational q = parse_rational(text_.substr(start, pos_ - start));
    skip_ws();
    if (get() != '#') fail("expected '#' after rational");
    return dd_embed(sf::make(q));
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, msg + " at offset " + std::to_string(pos_) + " in '" +
                                       std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t depth_;
  std::size_t pos_ = 0;
};

}  // namespace

DedekindNumber evaluate_expression(std::string_view expr, std::size_t depth) {
  return ExprParser(expr, depth).parse();
}

}  // namespace nsreal::wattenberg
