#pragma once

// Degree-truncated cochain complex C^n = Hom(H, H^{(x)n}) of H viewed as a
// bicomodule over itself through the twisted coactions
//   left  = (s1 (x) id) Delta,   right = (id (x) s2) Delta,
// together with the universal map c_gamma out of (H, lambda).
//
// Every cochain is stored on the forests of degree <= N and its values are
// truncated to total degree <= N. All structure maps preserve degree, so the
// truncation commutes with them and identities hold exactly below the cap.

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ckhopf/hopf.hpp"
#include "ckhopf/report.hpp"

namespace ckhopf {

struct TruncatedBasis {
  std::size_t max_degree = 0;
  std::vector<Forest> forests;  // by degree, then encoding

  static TruncatedBasis make(std::size_t max_degree) { return {max_degree, forests_up_to(max_degree)}; }
};

template <Coefficient C>
Element<C> as_element(const Tensor<C>& t) {
  Element<C> r;
  for (const auto& [k, c] : t) {
    if (k.size() != 1) throw std::invalid_argument("as_element: expected a one-slot tensor");
    r.add(k[0], c);
  }
  return r;
}

/// A linear map H -> H^{(x)arity}, given on the truncated basis.
template <Coefficient C>
class Cochain {
 public:
  Cochain(std::size_t arity, std::size_t max_degree) : arity_(arity), max_degree_(max_degree) {}

  /// Tabulates fn (Forest -> Tensor<C>) on every forest of degree <= N.
  template <class Fn>
  static Cochain from_function(std::size_t arity, std::size_t max_degree, Fn&& fn) {
    Cochain c(arity, max_degree);
    for (const auto& f : forests_up_to(max_degree)) c.set(f, fn(f));
    return c;
  }

  static Cochain zero(std::size_t arity, std::size_t max_degree) { return Cochain(arity, max_degree); }

  static Cochain identity(std::size_t max_degree) {
    return from_function(1, max_degree, [](const Forest& f) { return Tensor<C>::monomial(TensorKey{f}); });
  }

  static Cochain lambda(std::size_t max_degree) {
    return from_function(1, max_degree,
                         [](const Forest& f) { return Tensor<C>::monomial(TensorKey{Forest::of(make_tree(f))}); });
  }

  static Cochain coproduct(const CoproductEngine<C>& delta, std::size_t max_degree) {
    return from_function(2, max_degree, [&](const Forest& f) { return delta.of_forest(f); });
  }

  std::size_t arity() const { return arity_; }
  std::size_t max_degree() const { return max_degree_; }

  void set(const Forest& f, const Tensor<C>& value) {
    if (f.degree() > max_degree_) throw std::out_of_range("cochain input above the degree cap");
    for (const auto& [k, c] : value) {
      if (k.size() != arity_) throw std::invalid_argument("cochain value has the wrong arity");
    }
    Tensor<C> t = truncate(value, max_degree_);
    if (t.is_zero()) {
      values_.erase(f);
    } else {
      values_.insert_or_assign(f, std::move(t));
    }
  }

  Tensor<C> at(const Forest& f) const {
    if (f.degree() > max_degree_) throw std::out_of_range("cochain input above the degree cap");
    auto it = values_.find(f);
    return it == values_.end() ? Tensor<C>() : it->second;
  }

  bool is_zero() const { return values_.empty(); }

  /// The input forests on which the cochain is nonzero.
  const std::map<Forest, Tensor<C>>& values() const { return values_; }

  Cochain& operator+=(const Cochain& o) {
    check_compatible(o);
    for (const auto& [f, t] : o.values_) set(f, at(f) + t);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_compatible(o);
    for (const auto& [f, t] : o.values_) set(f, at(f) - t);
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void check_compatible(const Cochain& o) const {
    if (o.arity_ != arity_ || o.max_degree_ != max_degree_) throw std::invalid_argument("incompatible cochains");
  }

  std::size_t arity_;
  std::size_t max_degree_;
  std::map<Forest, Tensor<C>> values_;
};

/// Face map d_i : C^{n-1} -> C^n for 0 <= i <= n, where n = arity(phi) + 1:
///   d_0(phi) = (s1 (x) phi) Delta,
///   d_i(phi) = Delta in slot i (1-based) after phi,  0 < i < n,
///   d_n(phi) = (phi (x) s2) Delta.
template <Coefficient C>
Cochain<C> face_map(std::size_t i, const Cochain<C>& phi, const CoproductEngine<C>& delta) {
  const std::size_t n = phi.arity() + 1;
  if (i > n) throw std::out_of_range("face map index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  const std::size_t cap = phi.max_degree();
  return Cochain<C>::from_function(n, cap, [&](const Forest& f) {
    Tensor<C> out;
    if (i == 0 || i == n) {
      for (const auto& [k, c] : delta.of_forest(f)) {
        if (i == 0) {
          out += tensor_concat(as_tensor(delta.sigma1().apply(k[0])), phi.at(k[1])).scaled(c);
        } else {
          out += tensor_concat(phi.at(k[0]), as_tensor(delta.sigma2().apply(k[1]))).scaled(c);
        }
      }
    } else {
      out = delta.in_slot(phi.at(f), i - 1);
    }
    return out;
  });
}

/// delta(phi) = sum_i (-1)^i d_i(phi).
template <Coefficient C>
Cochain<C> coboundary(const Cochain<C>& phi, const CoproductEngine<C>& delta) {
  Cochain<C> out = Cochain<C>::zero(phi.arity() + 1, phi.max_degree());
  for (std::size_t i = 0; i <= phi.arity() + 1; ++i) {
    if (i % 2 == 0) {
      out += face_map(i, phi, delta);
    } else {
      out -= face_map(i, phi, delta);
    }
  }
  return out;
}

/// Checks Delta phi = (s1 (x) phi + phi (x) s2) Delta on every forest of
/// degree <= the cochain's cap, both sides truncated at the cap.
template <Coefficient C>
CheckReport is_one_cocycle(const Cochain<C>& phi, const CoproductEngine<C>& delta, const std::string& name = "φ") {
  if (phi.arity() != 1) throw std::invalid_argument("is_one_cocycle: expected a 1-cochain");
  const std::size_t cap = phi.max_degree();
  CheckReport report;
  report.identity = "Δ∘" + name + " = (σ1⊗" + name + " + " + name + "⊗σ2)∘Δ under Δ[" + delta.sigma1().name() + "," +
                    delta.sigma2().name() + "]";
  report.degree_cap = cap;
  for (const auto& f : forests_up_to(cap)) {
    const Tensor<C> lhs = truncate(delta(as_element(phi.at(f))), cap);
    Tensor<C> rhs;
    for (const auto& [k, c] : delta.of_forest(f)) {
      rhs += tensor_of(delta.sigma1().apply(k[0]), as_element(phi.at(k[1]))).scaled(c);
      rhs += tensor_of(as_element(phi.at(k[0])), delta.sigma2().apply(k[1])).scaled(c);
    }
    rhs = truncate(rhs, cap);
    report.compare(lhs == rhs, f.encoding(), [&] { return format_tensor(lhs); }, [&] { return format_tensor(rhs); });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hopf targets and the universal map

/// A Hopf algebra B with a linear endomorphism gamma and twistings s1, s2,
/// presented through the operations the universal construction needs.
/// `terms` splits a two-slot tensor into pure tensors of basis elements.
template <class T>
concept HopfTarget = requires(const T& t, const typename T::value_type& v, const typename T::tensor_type& w,
                              std::size_t n) {
  typename T::coeff_type;
  { t.unit() } -> std::same_as<typename T::value_type>;
  { t.product(v, v) } -> std::same_as<typename T::value_type>;
  { t.counit(v) } -> std::same_as<typename T::coeff_type>;
  { t.coproduct(v) } -> std::same_as<typename T::tensor_type>;
  { t.gamma(v) } -> std::same_as<typename T::value_type>;
  { t.sigma1(v) } -> std::same_as<typename T::value_type>;
  { t.sigma2(v) } -> std::same_as<typename T::value_type>;
  { t.tensor(v, v) } -> std::same_as<typename T::tensor_type>;
  { t.terms(w) } -> std::same_as<std::vector<std::tuple<typename T::value_type, typename T::value_type,
                                                        typename T::coeff_type>>>;
  { t.basis(n) } -> std::same_as<std::vector<typename T::value_type>>;
  { t.describe(v) } -> std::same_as<std::string>;
  { t.describe(w) } -> std::same_as<std::string>;
  { t.name() } -> std::same_as<std::string>;
};

/// H itself (optionally truncated at a degree cap, with products and tensors
/// truncated by total degree), with gamma given on forests.
template <Coefficient C>
class ForestTarget {
 public:
  using coeff_type = C;
  using value_type = Element<C>;
  using tensor_type = Tensor<C>;
  using GammaFn = std::function<Element<C>(const Forest&)>;

  ForestTarget(const CoproductEngine<C>& delta, GammaFn gamma, std::optional<std::size_t> cap = std::nullopt,
               std::string label = "H")
      : delta_(delta), gamma_(std::move(gamma)), cap_(cap), label_(std::move(label)) {}

  /// (H, lambda), or its truncation at `cap`.
  static ForestTarget with_lambda(const CoproductEngine<C>& delta, std::optional<std::size_t> cap = std::nullopt) {
    return ForestTarget(
        delta, [](const Forest& f) { return tree_element<C>(make_tree(f)); }, cap,
        cap ? "H/(deg > " + std::to_string(*cap) + ")" : std::string("H"));
  }

  std::optional<std::size_t> cap() const { return cap_; }

  value_type unit() const { return ckhopf::unit<C>(); }
  value_type product(const value_type& a, const value_type& b) const { return cut(ckhopf::product(a, b)); }
  coeff_type counit(const value_type& a) const { return ckhopf::counit(a); }
  tensor_type coproduct(const value_type& a) const { return cut(delta_(a)); }
  value_type gamma(const value_type& a) const { return cut(a.map_linear(gamma_)); }
  value_type sigma1(const value_type& a) const { return delta_.sigma1()(a); }
  value_type sigma2(const value_type& a) const { return delta_.sigma2()(a); }
  tensor_type tensor(const value_type& a, const value_type& b) const { return cut(tensor_of(a, b)); }

  std::vector<std::tuple<value_type, value_type, coeff_type>> terms(const tensor_type& w) const {
    std::vector<std::tuple<value_type, value_type, coeff_type>> out;
    for (const auto& [k, c] : w) out.emplace_back(basis_element<C>(k[0]), basis_element<C>(k[1]), c);
    return out;
  }

  std::vector<value_type> basis(std::size_t max_degree) const {
    std::vector<value_type> out;
    for (const auto& f : forests_up_to(cap_ ? std::min(*cap_, max_degree) : max_degree)) {
      out.push_back(basis_element<C>(f));
    }
    return out;
  }

  std::string describe(const value_type& a) const { return format_element(a); }
  std::string describe(const tensor_type& w) const { return format_tensor(w); }
  std::string name() const { return label_; }

 private:
  value_type cut(const value_type& a) const { return cap_ ? truncate(a, *cap_) : a; }
  tensor_type cut(const tensor_type& w) const { return cap_ ? truncate(w, *cap_) : w; }

  const CoproductEngine<C>& delta_;
  GammaFn gamma_;
  std::optional<std::size_t> cap_;
  std::string label_;
};

/// (f (x) g)(w) on a target's tensors.
template <HopfTarget T, class Left, class Right>
typename T::tensor_type target_tensor_map(const T& target, const typename T::tensor_type& w, Left&& left,
                                          Right&& right) {
  typename T::tensor_type out;
  for (const auto& [a, b, c] : target.terms(w)) out += target.tensor(left(a), right(b)).scaled(c);
  return out;
}

/// Checks that gamma is a 1-cocycle of the target,
/// Delta gamma = (s1 (x) gamma + gamma (x) s2) Delta, on the target's basis up
/// to max_degree.
template <HopfTarget T>
CheckReport is_target_cocycle(const T& target, std::size_t max_degree) {
  using V = typename T::value_type;
  CheckReport report;
  report.identity = "Δ∘γ = (σ1⊗γ + γ⊗σ2)∘Δ on " + target.name();
  report.degree_cap = max_degree;
  auto gamma = [&](const V& v) { return target.gamma(v); };
  auto s1 = [&](const V& v) { return target.sigma1(v); };
  auto s2 = [&](const V& v) { return target.sigma2(v); };
  for (const auto& v : target.basis(max_degree)) {
    const auto lhs = target.coproduct(target.gamma(v));
    const auto d = target.coproduct(v);
    auto rhs = target_tensor_map(target, d, s1, gamma);
    rhs += target_tensor_map(target, d, gamma, s2);
    report.compare(lhs == rhs, target.describe(v), [&] { return target.describe(lhs); },
                   [&] { return target.describe(rhs); });
  }
  return report;
}

/// The unique algebra map c : H -> B with c(1) = 1 and c lambda = gamma c,
/// evaluated top-down with memoization. Decorated forests need an image for
/// every loose generator.
template <HopfTarget T>
class UniversalMap {
 public:
  using value_type = typename T::value_type;

  explicit UniversalMap(const T& target, std::map<std::string, value_type> generator_images = {})
      : target_(target), generator_images_(std::move(generator_images)) {}

  value_type of_forest(const Forest& f) const {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    value_type r = target_.unit();
    for (const auto& g : f.loose_generators()) {
      auto it = generator_images_.find(g);
      if (it == generator_images_.end()) throw std::invalid_argument("no image given for generator '" + g + "'");
      r = target_.product(r, it->second);
    }
    for (const auto& t : f.trees()) r = target_.product(r, of_tree(t));
    return memo_.emplace(f, std::move(r)).first->second;
  }

  value_type of_tree(const Tree& t) const { return target_.gamma(of_forest(root_branches(t))); }

  template <Coefficient C>
  value_type operator()(const Element<C>& a) const {
    value_type r;
    for (const auto& [f, c] : a) r += of_forest(f).scaled(c);
    return r;
  }

  /// The same map tabulated bottom-up by degree on undecorated forests, each
  /// tree from its (already tabulated) branches and each other forest as the
  /// product of its trees.
  std::map<Forest, value_type> tabulate_bottom_up(std::size_t max_degree) const {
    std::map<Forest, value_type> table;
    for (const auto& f : forests_up_to(max_degree)) {
      if (f.is_empty()) {
        table.emplace(f, target_.unit());
      } else if (f.trees().size() == 1) {
        table.emplace(f, target_.gamma(table.at(root_branches(f.trees().front()))));
      } else {
        value_type r = target_.unit();
        for (const auto& t : f.trees()) r = target_.product(r, table.at(Forest::of(t)));
        table.emplace(f, std::move(r));
      }
    }
    return table;
  }

 private:
  const T& target_;
  std::map<std::string, value_type> generator_images_;
  mutable std::map<Forest, value_type> memo_;
};

template <HopfTarget T>
UniversalMap<T> universal_map(const T& target) {
  return UniversalMap<T>(target);
}

/// Checks Delta_B(c(F)) = (c (x) c)(Delta_H(F)) and eps_B(c(F)) = eps_H(F) on
/// every forest of degree <= max_degree.
template <HopfTarget T, Coefficient C>
CheckReport verify_coalgebra_map(const UniversalMap<T>& c, const T& target, const CoproductEngine<C>& delta,
                                 std::size_t max_degree, const std::string& map_name = "c") {
  static_assert(std::is_same_v<typename T::coeff_type, C>, "target and source must share the coefficient ring");
  CheckReport report;
  report.identity = "Δ_B∘" + map_name + " = (" + map_name + "⊗" + map_name + ")∘Δ_H and ε_B∘" + map_name +
                    " = ε_H, B = " + target.name();
  report.degree_cap = max_degree;
  for (const auto& f : forests_up_to(max_degree)) {
    const auto image = c.of_forest(f);
    const auto lhs = target.coproduct(image);
    typename T::tensor_type rhs;
    for (const auto& [k, coeff] : delta.of_forest(f)) rhs += target.tensor(c.of_forest(k[0]), c.of_forest(k[1])).scaled(coeff);
    report.compare(lhs == rhs, f.encoding(), [&] { return target.describe(lhs); }, [&] { return target.describe(rhs); },
                   "coproduct");
    const C e_lhs = target.counit(image);
    const C e_rhs = f.is_empty() ? one<C>() : C();
    report.compare(e_lhs == e_rhs, f.encoding(), [&] { return to_string(e_lhs); }, [&] { return to_string(e_rhs); },
                   "counit");
  }
  return report;
}

}  // namespace ckhopf
