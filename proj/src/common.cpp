#include "nsreal/common.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace nsreal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndetermined: return "Undetermined";
    case ErrorCode::kClassUndetermined: return "ClassUndetermined";
    case ErrorCode::kSignUndetermined: return "SignUndetermined";
    case ErrorCode::kConvergenceUnknown: return "ConvergenceUnknown";
    case ErrorCode::kNotConvergentAtDepth: return "NotConvergentAtDepth";
    case ErrorCode::kUnlimited: return "Unlimited";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDivisionByZeroAtIndex: return "DivisionByZeroAtIndex";
    case ErrorCode::kZeroTailAtDepth: return "ZeroTailAtDepth";
    case ErrorCode::kNotInfinitesimal: return "NotInfinitesimal";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kDepthTooSmall: return "DepthTooSmall";
    case ErrorCode::kZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kZeroRoot: return "ZeroRoot";
    case ErrorCode::kRadiusViolation: return "RadiusViolation";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code) {}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational Interval::magnitude() const { return std::max(abs(lo), abs(hi)); }

Rational Interval::mignitude() const {
  if (lo <= 0 && hi >= 0) return 0;
  return std::min(abs(lo), abs(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  std::array<Rational, 4> p = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo,
                               a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

Interval pow(const Interval& a, unsigned exponent) {
  Interval result = Interval::point(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * a;
  if (exponent % 2 == 0 && result.lo < 0) result.lo = 0;
  return result;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_label(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::kParse, "empty rational");
  try {
    if (s.find_first_of(".eE") != std::string::npos) {
      // Decimal/scientific notation, converted exactly.
      std::size_t epos = s.find_first_of("eE");
      std::string mant = s.substr(0, epos);
      long exp10 = 0;
      if (epos != std::string::npos) exp10 = std::stol(s.substr(epos + 1));
      bool neg = !mant.empty() && mant[0] == '-';
      if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant.erase(0, 1);
      std::size_t dot = mant.find('.');
      std::string digits = mant;
      if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        digits.erase(dot, 1);
      }
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorCode::kParse, "bad decimal '" + std::string(text) + "'");
      Rational r{Integer(digits)};
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
      if (exp10 < 0) r /= scale; else r *= scale;
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    std::size_t slash = s.find('/');
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                ((c == '-' || c == '+') && (i == 0));
      if (!ok) throw Error(ErrorCode::kParse, "bad rational '" + std::string(text) + "'");
    }
    Rational r;
    if (slash == std::string::npos) {
      r = Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    } else {
      std::string num = s.substr(0, slash);
      if (!num.empty() && num[0] == '+') num.erase(0, 1);
      Integer den(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::kParse, "zero denominator");
      r = Rational(Integer(num), den);
    }
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "bad rational '" + std::string(text) + "'");
  }
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace nsreal

namespace nsreal {

Rational sum_pairwise(std::vector<Rational> terms) {
  if (terms.empty()) return 0;
  while (terms.size() > 1) {
    std::size_t half = (terms.size() + 1) / 2;
    for (std::size_t i = 0; i < terms.size() / 2; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
    if (terms.size() % 2 == 1) terms[terms.size() / 2] = terms.back();
    terms.resize(half);
  }
  return terms.front();
}

}  // namespace nsreal
