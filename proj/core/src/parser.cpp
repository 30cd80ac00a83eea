#include "reebsnake/parser.hpp"

#include <cctype>
#include <string>

#include "reebsnake/error.hpp"

namespace reebsnake {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivariatePolynomial parse() {
    BivariatePolynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BivariatePolynomial expr() {
    BivariatePolynomial acc = term();
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

  BivariatePolynomial term() {
    BivariatePolynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const size_t at = pos_;
        BivariatePolynomial d = unary();
        if (d.total_degree() > 0) {
          pos_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc *= Rational(1 / d.coefficient(0, 0));
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivariatePolynomial power() {
    BivariatePolynomial base = atom();
    if (accept('^')) {
      Integer e = integer();
      if (!e.fits_uint_p() || e > 10000) fail("exponent too large");
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  BivariatePolynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivariatePolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return BivariatePolynomial::x();
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePolynomial::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BivariatePolynomial::constant(Rational(integer()));
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace reebsnake
