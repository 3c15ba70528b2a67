#include "nsreal/dsl.hpp"

#include <cctype>
#include <string>

#include "nsreal/goldbach.hpp"

namespace nsreal::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  extsum::SeriesSpec parse() {
    auto s = series();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a series name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational_arg() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    std::string raw(text_.substr(start, pos_ - start));
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    try {
      return parse_rational(raw);
    } catch (const Error&) {
      fail("bad rational '" + raw + "'");
    }
  }

  extsum::SeriesSpec series() {
    std::string name = identifier();
    if (name == "powers_recip" || name == "harmonic") {
      if (eat('(')) {
        if (!eat(')')) fail(name + " takes no argument");
      }
      return name == "harmonic" ? extsum::harmonic_series() : goldbach::powers_recip();
    }
    if (!eat('(')) fail(name + " needs an argument");
    extsum::SeriesSpec out;
    if (name == "alt") {
      out = extsum::alternate(series());
    } else if (name == "geom") {
      Rational r = rational_arg();
      out = extsum::geom(r);
    } else if (name == "pser") {
      Rational k = rational_arg();
      if (k.get_den() != 1 || k < 0 || k > 64) fail("pser needs an integer in [0, 64]");
      out = extsum::pser(static_cast<unsigned>(k.get_num().get_ui()));
    } else {
      fail("unknown series '" + name + "'");
    }
    if (!eat(')')) fail("expected ')'");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

extsum::SeriesSpec parse_series(std::string_view text) { return Parser(text).parse(); }

}  // namespace nsreal::dsl
