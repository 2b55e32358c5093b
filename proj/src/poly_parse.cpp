#include <cctype>
#include <string>
#include <string_view>

#include "skein/error.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

namespace {

// Recursive-descent parser for rational expressions in q and z:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | 'q' | 'z' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFn parse_all() {
    RationalFn r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFn term() {
    RationalFn r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFn d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFn power() {
    RationalFn base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_space();
    std::size_t at = pos_;
    long e = integer_literal();
    if (e > 100000) throw ParseError("exponent too large", at);
    if (neg && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
  }

  long integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFn atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'q' || c == 'z') {
      ++pos_;
      return c == 'q' ? RationalFn(LaurentPoly::q()) : RationalFn(LaurentPoly::z());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFn(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn RationalFn::parse(std::string_view text) { return Parser(text).parse_all(); }

LaurentPoly LaurentPoly::parse(std::string_view text) {
  RationalFn r = RationalFn::parse(text);
  if (!r.is_laurent()) throw ParseError("not a Laurent polynomial", 0);
  return r.num();
}

}  // namespace skein
