#include "ckhopf/coeff.hpp"

#include <sstream>

namespace ckhopf {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      }
    }
    std::string digits(part);
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true), mpz_class(1));
  return Rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BivariatePoly::BivariatePoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

BivariatePoly BivariatePoly::monomial(std::uint64_t i, std::uint64_t j, const Rational& c) {
  BivariatePoly p;
  p.add_term({i, j}, c);
  return p;
}

bool BivariatePoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} && terms_.begin()->second.is_one();
}

bool BivariatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational BivariatePoly::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rational() : it->second;
}

void BivariatePoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return r;
}

BivariatePoly operator/(const BivariatePoly& a, const BivariatePoly& b) {
  if (!b.is_constant() || b.is_zero()) {
    throw std::domain_error("polynomial division by non-constant or zero divisor");
  }
  const Rational d = b.constant_term();
  BivariatePoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c / d);
  return r;
}

Rational BivariatePoly::substitute(const Rational& v1, const Rational& v2) const {
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * power(v1, e.first) * power(v2, e.second);
  return sum;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        out << '-';
        mag = -c;
      }
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    bool need_star = false;
    if (constant || !mag.is_one()) {
      out << mag.to_string();
      need_star = true;
    }
    auto factor = [&](const char* name, std::uint64_t exp) {
      if (exp == 0) return;
      if (need_star) out << '*';
      out << name;
      if (exp > 1) out << '^' << exp;
      need_star = true;
    };
    factor("q1", e.first);
    factor("q2", e.second);
  }
  return out.str();
}

}  // namespace ckhopf
