#include "ckhopf/expr.hpp"

#include <cctype>

namespace ckhopf {

namespace {

using P = BivariatePoly;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Element<P> parse() {
    Element<P> e = sum();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_middle_dot() const { return text_.substr(pos_, 2) == "\xC2\xB7"; }

  bool starts_factor() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '[' || c == '{' || c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
  }

  Element<P> sum() {
    skip_space();
    Element<P> total;
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    for (;;) {
      Element<P> t = term();
      total += negate ? -t : t;
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        negate = text_[pos_] == '-';
        ++pos_;
        continue;
      }
      return total;
    }
  }

  Element<P> term() {
    skip_space();
    Element<P> t = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_space();
        t = product(t, factor());
      } else if (at_middle_dot()) {
        pos_ += 2;
        skip_space();
        t = product(t, factor());
      } else if (starts_factor()) {
        t = product(t, factor());
      } else {
        return t;
      }
    }
  }

  Element<P> factor() {
    if (pos_ >= text_.size()) fail("expected a term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element<P> e = sum();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '[' || c == '{') return forest();
    if (c == 'q') return variable();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    fail(std::string("unexpected '") + c + "'");
  }

  Element<P> forest() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[' || c == '{') {
        ++depth;
      } else if (c == ']' || c == '}') {
        if (--depth < 0) break;
      } else if (depth == 0) {
        break;
      }
      ++pos_;
    }
    try {
      return basis_element<P>(parse_forest(text_.substr(start, pos_ - start)));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), e.detail());
    }
  }

  Element<P> variable() {
    const std::size_t start = pos_;
    if (pos_ + 1 >= text_.size() || (text_[pos_ + 1] != '1' && text_[pos_ + 1] != '2')) fail("expected q1 or q2");
    const bool first = text_[pos_ + 1] == '1';
    pos_ += 2;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected q1 or q2");
    }
    std::uint64_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = integer();
    }
    P v = power(first ? P::q1() : P::q2(), exponent);
    return unit<P>().scaled(v);
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start >= 18) fail("integer too long");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Element<P> number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    Rational r;
    try {
      r = Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(start, e.what());
    }
    return unit<P>().scaled(P(r));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element<BivariatePoly> parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

Element<Rational> specialize(const Element<BivariatePoly>& a, const Rational& q1, const Rational& q2) {
  Element<Rational> r;
  for (const auto& [f, c] : a) r.add(f, c.substitute(q1, q2));
  return r;
}

}  // namespace ckhopf
