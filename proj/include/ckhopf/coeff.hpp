#pragma once

// Exact coefficient rings: arbitrary-precision rationals and polynomials in
// the two formal deformation parameters q1, q2.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ckhopf {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

/// Polynomial in q1, q2 with rational coefficients, stored as a sparse map
/// from exponent pairs (i, j) to nonzero coefficients.
class BivariatePoly {
 public:
  using Exponents = std::pair<std::uint64_t, std::uint64_t>;

  BivariatePoly() = default;
  BivariatePoly(long c) : BivariatePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  BivariatePoly(const Rational& c);                      // NOLINT(google-explicit-constructor)

  static BivariatePoly q1() { return monomial(1, 0); }
  static BivariatePoly q2() { return monomial(0, 1); }
  static BivariatePoly monomial(std::uint64_t i, std::uint64_t j, const Rational& c = Rational(1));

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a (possibly zero) constant.
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

  /// Division by a nonzero constant; anything else is a domain error.
  friend BivariatePoly operator/(const BivariatePoly& a, const BivariatePoly& b);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// Exact evaluation at q1 = v1, q2 = v2.
  Rational substitute(const Rational& v1, const Rational& v2) const;

  /// "c*q1^i*q2^j" terms joined by " + " / " - ", sorted by (i, j)
  /// ascending. Unit coefficients and unit exponents are omitted.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

inline std::string to_string(const BivariatePoly& p) { return p.to_string(); }

inline Rational poly_substitute(const BivariatePoly& p, const Rational& v1, const Rational& v2) {
  return p.substitute(v1, v2);
}

template <class C>
concept Coefficient = std::regular<C> && std::constructible_from<C, Rational> &&
                      requires(const C a, const C b) {
                        { a + b } -> std::same_as<C>;
                        { a - b } -> std::same_as<C>;
                        { a * b } -> std::same_as<C>;
                        { a / b } -> std::same_as<C>;
                        { -a } -> std::same_as<C>;
                        { a.is_zero() } -> std::same_as<bool>;
                        { to_string(a) } -> std::same_as<std::string>;
                      };

/// Exact power by squaring; pow(0, 0) = 1.
template <Coefficient C>
C power(C base, std::uint64_t exponent) {
  C result(Rational(1));
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// True when the coefficient has a multiplicative inverse in its ring.
inline bool is_unit(const Rational& r) { return !r.is_zero(); }
inline bool is_unit(const BivariatePoly& p) { return p.is_constant() && !p.is_zero(); }

}  // namespace ckhopf
