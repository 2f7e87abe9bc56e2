#include "polyctrl/parser.hpp"

#include <cctype>
#include <string>

#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

constexpr long kMaxExponent = 10000;

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const {
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return factor();
  }

  Polynomial factor() {
    Polynomial base_value = base();
    if (!accept('^')) return base_value;
    skip_space();
    const std::size_t exp_pos = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    const std::string text = digits();
    if (text.size() > 6 || std::stol(text) > kMaxExponent) {
      pos_ = exp_pos;
      fail("exponent too large");
    }
    const auto e = static_cast<unsigned>(std::stol(text));
    if (!negative) return base_value.pow(e);
    if (!ring_.laurent()) {
      pos_ = exp_pos;
      fail("negative exponent in non-Laurent ring");
    }
    if (!base_value.is_monomial()) {
      pos_ = exp_pos;
      fail("negative exponent needs a single-term base");
    }
    const Term& t = base_value.terms()[0];
    return Polynomial::monomial(ring_, t.mono.inverse(), 1 / t.coeff).pow(e);
  }

  Polynomial base() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10);
      Rational value(num);
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        skip_space();
        Integer den(digits(), 10);
        if (den == 0) fail("zero denominator");
        value = Rational(num, den);
        value.canonicalize();
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      const auto index = ring_.index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const Ring& ring) {
  return Parser(src, ring).parse();
}

}  // namespace polyctrl
