#pragma once

#include <map>
#include <string>
#include <utility>

#include "ckhopf/coeff.hpp"

namespace ckhopf {

/// Finite formal linear combination of basis keys with coefficients in C.
/// Zero coefficients are never stored, so equality is structural.
template <class Key, Coefficient C>
class LinComb {
 public:
  using key_type = Key;
  using coeff_type = C;
  using map_type = std::map<Key, C>;

  LinComb() = default;

  static LinComb monomial(Key key, C coeff = C(Rational(1))) {
    LinComb r;
    r.add(std::move(key), coeff);
    return r;
  }

  void add(const Key& key, const C& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  C coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? C() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const { return scaled(C(Rational(-1))); }

  LinComb scaled(const C& factor) const {
    LinComb r;
    if (factor.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.add(k, c * factor);
    return r;
  }

  /// Applies a key-to-combination map linearly.
  template <class Fn>
  auto map_linear(Fn&& fn) const -> decltype(fn(std::declval<const Key&>())) {
    decltype(fn(std::declval<const Key&>())) r;
    for (const auto& [k, c] : terms_) r += fn(k).scaled(c);
    return r;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

/// Coefficient prefix used by the textual forms: "" for 1, "-" for -1,
/// "(p)·" for compound polynomial coefficients, "c·" otherwise.
template <Coefficient C>
std::string coefficient_prefix(const C& c) {
  if (c == C(Rational(1))) return "";
  if (c == C(Rational(-1))) return "-";
  const std::string s = to_string(c);
  const bool compound = s.find_first_of("+ ") != std::string::npos ||
                        s.find('-', 1) != std::string::npos;
  return compound ? "(" + s + ")·" : s + "·";
}

/// Renders a combination as "prefix·key + ..." in map order; a negative
/// rational coefficient after the first term is written with " - ".
template <class Key, Coefficient C, class KeyFmt>
std::string format_lincomb(const LinComb<Key, C>& v, KeyFmt&& key_fmt) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string prefix = coefficient_prefix(c);
    if (!first) {
      if (!prefix.empty() && prefix.front() == '-') {
        out += " - ";
        prefix.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    first = false;
    out += prefix;
    out += key_fmt(k);
  }
  return out;
}

}  // namespace ckhopf
