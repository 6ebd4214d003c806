#include "bourbaki/parser.hpp"

#include <cctype>

#include "bourbaki/error.hpp"

namespace bourbaki {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

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

  Polynomial expr() {
    const bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    mpz_class e = integer();
    if (e > 10000) {
      pos_ = start;
      fail("exponent too large");
    }
    return static_cast<unsigned>(e.get_ui());
  }

  Polynomial factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        value /= den;
      }
      if (!ring_.field().is_rational()) {
        FieldElement num = FieldElement::from_integer(ring_.field(), value.get_num());
        FieldElement den = FieldElement::from_integer(ring_.field(), value.get_den());
        if (den.is_zero()) fail("denominator vanishes in " + ring_.field().name());
        return Polynomial::constant(ring_, num / den);
      }
      return Polynomial::constant(ring_, FieldElement::from_rational(ring_.field(), value));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const int var = ring_.index_of(c);
      if (var < 0) fail(std::string("unknown variable '") + c + "'");
      ++pos_;
      Polynomial v = Polynomial::variable(ring_, var);
      return accept('^') ? v.pow(exponent()) : v;
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) {
        skip();
        fail("expected ')'");
      }
      return accept('^') ? inner.pow(exponent()) : inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace bourbaki
