#pragma once

// The Hopf algebra H of rooted forests: product, grafting operator lambda,
// counit, twisting maps, the twisted coproduct family and the antipode.
//
// The coproduct for a pair of twistings (s1, s2) is the unique algebra map
// with Delta(1) = 1 (x) 1, Delta(g) = 1 (x) g + g (x) 1 on loose generators,
// and
//
//   Delta(lambda(F)) = (s1 (x) lambda + lambda (x) s2)(Delta(F)).
//
// It is evaluated by that recursion and memoized per canonical tree.

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ckhopf/coeff.hpp"
#include "ckhopf/lincomb.hpp"
#include "ckhopf/report.hpp"
#include "ckhopf/trees.hpp"

namespace ckhopf {

template <Coefficient C>
using Element = LinComb<Forest, C>;

/// Basis key of an n-fold tensor power: one forest per slot.
using TensorKey = std::vector<Forest>;

template <Coefficient C>
using Tensor = LinComb<TensorKey, C>;

template <Coefficient C>
using TensorElement2 = Tensor<C>;
template <Coefficient C>
using TensorElement3 = Tensor<C>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Coefficient C>
C one() {
  return C(Rational(1));
}

template <Coefficient C>
Element<C> unit() {
  return Element<C>::monomial(Forest());
}

template <Coefficient C>
Element<C> basis_element(const Forest& f, const C& coeff = one<C>()) {
  return Element<C>::monomial(f, coeff);
}

template <Coefficient C>
Element<C> tree_element(const Tree& t, const C& coeff = one<C>()) {
  return Element<C>::monomial(Forest::of(t), coeff);
}

template <Coefficient C>
Element<C> product(const Element<C>& a, const Element<C>& b) {
  Element<C> r;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) r.add(forest_mul(fa, fb), ca * cb);
  }
  return r;
}

template <Coefficient C>
Element<C> lambda_op(const Element<C>& a) {
  Element<C> r;
  for (const auto& [f, c] : a) r.add(Forest::of(make_tree(f)), c);
  return r;
}

template <Coefficient C>
C counit(const Element<C>& a) {
  return a.coefficient(Forest());
}

inline bool forest_counit_is_one(const Forest& f) { return f.is_empty(); }

/// Keeps only the terms of degree <= max_degree.
template <Coefficient C>
Element<C> truncate(const Element<C>& a, std::size_t max_degree) {
  Element<C> r;
  for (const auto& [f, c] : a) {
    if (f.degree() <= max_degree) r.add(f, c);
  }
  return r;
}

inline std::size_t total_degree(const TensorKey& key) {
  std::size_t d = 0;
  for (const auto& f : key) d += f.degree();
  return d;
}

/// Keeps only the terms of total degree <= max_degree.
template <Coefficient C>
Tensor<C> truncate(const Tensor<C>& a, std::size_t max_degree) {
  Tensor<C> r;
  for (const auto& [k, c] : a) {
    if (total_degree(k) <= max_degree) r.add(k, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensors

/// a (x) b for elements of H.
template <Coefficient C>
Tensor<C> tensor_of(const Element<C>& a, const Element<C>& b) {
  Tensor<C> r;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) r.add(TensorKey{fa, fb}, ca * cb);
  }
  return r;
}

/// Concatenation of slots: (a1 (x) .. (x) an) (x) (b1 (x) .. (x) bm).
template <Coefficient C>
Tensor<C> tensor_concat(const Tensor<C>& a, const Tensor<C>& b) {
  Tensor<C> r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      TensorKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  }
  return r;
}

/// Views an element as a one-slot tensor.
template <Coefficient C>
Tensor<C> as_tensor(const Element<C>& a) {
  Tensor<C> r;
  for (const auto& [f, c] : a) r.add(TensorKey{f}, c);
  return r;
}

/// Product in the tensor-power algebra: slotwise forest multiplication.
template <Coefficient C>
Tensor<C> tensor_mul(const Tensor<C>& a, const Tensor<C>& b) {
  Tensor<C> r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.size() != kb.size()) throw std::invalid_argument("tensor_mul: arity mismatch");
      TensorKey k(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] = forest_mul(ka[i], kb[i]);
      r.add(k, ca * cb);
    }
  }
  return r;
}

/// The unit 1 (x) ... (x) 1 of the n-fold tensor power.
template <Coefficient C>
Tensor<C> tensor_unit(std::size_t arity) {
  return Tensor<C>::monomial(TensorKey(arity, Forest()));
}

/// Multiplies the slots of a two-slot tensor together.
template <Coefficient C>
Element<C> multiply_slots(const Tensor<C>& t) {
  Element<C> r;
  for (const auto& [k, c] : t) {
    if (k.size() != 2) throw std::invalid_argument("multiply_slots: expected a two-slot tensor");
    r.add(forest_mul(k[0], k[1]), c);
  }
  return r;
}

template <Coefficient C>
std::string format_element(const Element<C>& a) {
  return format_lincomb(a, [](const Forest& f) { return f.encoding(); });
}

template <Coefficient C>
std::string format_tensor(const Tensor<C>& t) {
  return format_lincomb(t, [](const TensorKey& k) {
    if (k.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0) s += "⊗";
      s += k[i].encoding();
    }
    return s;
  });
}

// ---------------------------------------------------------------------------
// Twisting maps

/// Grading-diagonal linear endomorphisms of H used to deform the coproduct.
template <Coefficient C>
class Twisting {
 public:
  struct Identity {};
  struct CounitUnit {};
  struct Convex {
    Rational alpha;
    Rational beta;
  };
  struct QPower {
    C q;
  };
  using Kind = std::variant<Identity, CounitUnit, Convex, QPower>;

  static Twisting identity() { return Twisting(Identity{}); }
  static Twisting counit_unit() { return Twisting(CounitUnit{}); }
  /// alpha * id + beta * u epsilon; requires alpha + beta = 1.
  static Twisting convex(const Rational& alpha, const Rational& beta) {
    if (alpha + beta != Rational(1)) throw std::invalid_argument("convex twisting requires alpha + beta = 1");
    return Twisting(Convex{alpha, beta});
  }
  /// F -> q^degree(F) F.
  static Twisting qpower(const C& q) { return Twisting(QPower{q}); }

  const Kind& kind() const { return kind_; }

  Element<C> apply(const Forest& f) const {
    return std::visit(
        [&](const auto& k) -> Element<C> {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Identity>) {
            return basis_element<C>(f);
          } else if constexpr (std::is_same_v<K, CounitUnit>) {
            return f.is_empty() ? unit<C>() : Element<C>();
          } else if constexpr (std::is_same_v<K, Convex>) {
            if (f.is_empty()) return unit<C>();  // alpha + beta = 1
            return basis_element<C>(f, C(k.alpha));
          } else {
            return basis_element<C>(f, power(k.q, f.degree()));
          }
        },
        kind_);
  }

  Element<C> operator()(const Element<C>& a) const { return a.map_linear([&](const Forest& f) { return apply(f); }); }

  std::string name() const {
    return std::visit(
        [](const auto& k) -> std::string {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Identity>) {
            return "Identity";
          } else if constexpr (std::is_same_v<K, CounitUnit>) {
            return "CounitUnit";
          } else if constexpr (std::is_same_v<K, Convex>) {
            return "Convex(" + k.alpha.to_string() + "," + k.beta.to_string() + ")";
          } else {
            return "QPower(" + to_string(k.q) + ")";
          }
        },
        kind_);
  }

 private:
  explicit Twisting(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

template <Coefficient C>
Element<C> twist_apply(const Twisting<C>& sigma, const Element<C>& a) {
  return sigma(a);
}

// ---------------------------------------------------------------------------
// Coproduct

template <Coefficient C>
class CoproductEngine {
 public:
  CoproductEngine(Twisting<C> sigma1, Twisting<C> sigma2)
      : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)), memo_(std::make_unique<Memo>()) {}

  const Twisting<C>& sigma1() const { return sigma1_; }
  const Twisting<C>& sigma2() const { return sigma2_; }

  /// Applies s1 (x) lambda + lambda (x) s2 to a two-slot tensor.
  Tensor<C> graft_twisted(const Tensor<C>& t) const {
    Tensor<C> r;
    for (const auto& [k, c] : t) {
      const Forest left_grafted = Forest::of(make_tree(k[0]));
      const Forest right_grafted = Forest::of(make_tree(k[1]));
      for (const auto& [f, a] : sigma1_.apply(k[0])) r.add(TensorKey{f, right_grafted}, c * a);
      for (const auto& [f, b] : sigma2_.apply(k[1])) r.add(TensorKey{left_grafted, f}, c * b);
    }
    return r;
  }

  Tensor<C> of_tree(const Tree& t) const {
    {
      std::lock_guard lock(memo_->mutex);
      auto it = memo_->trees.find(t.encoding());
      if (it != memo_->trees.end()) return it->second;
    }
    Tensor<C> r = graft_twisted(of_forest(root_branches(t)));
    std::lock_guard lock(memo_->mutex);
    return memo_->trees.try_emplace(t.encoding(), std::move(r)).first->second;
  }

  Tensor<C> of_forest(const Forest& f) const {
    Tensor<C> r = tensor_unit<C>(2);
    for (const auto& g : f.loose_generators()) {
      Tensor<C> dg;
      dg.add(TensorKey{Forest(), Forest::generator(g)}, one<C>());
      dg.add(TensorKey{Forest::generator(g), Forest()}, one<C>());
      r = tensor_mul(r, dg);
    }
    for (const auto& t : f.trees()) r = tensor_mul(r, of_tree(t));
    return r;
  }

  Tensor<C> operator()(const Element<C>& a) const {
    Tensor<C> r;
    for (const auto& [f, c] : a) r += of_forest(f).scaled(c);
    return r;
  }

  /// Applies the coproduct in slot `slot` (0-based) of an n-slot tensor.
  Tensor<C> in_slot(const Tensor<C>& t, std::size_t slot) const {
    Tensor<C> r;
    for (const auto& [k, c] : t) {
      if (slot >= k.size()) throw std::out_of_range("coproduct slot out of range");
      for (const auto& [dk, dc] : of_forest(k[slot])) {
        TensorKey nk;
        nk.reserve(k.size() + 1);
        nk.insert(nk.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(slot));
        nk.insert(nk.end(), dk.begin(), dk.end());
        nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(slot) + 1, k.end());
        r.add(nk, c * dc);
      }
    }
    return r;
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::string, Tensor<C>> trees;
  };
  Twisting<C> sigma1_;
  Twisting<C> sigma2_;
  std::unique_ptr<Memo> memo_;
};

template <Coefficient C>
Tensor<C> coproduct(const Element<C>& a, const Twisting<C>& sigma1, const Twisting<C>& sigma2) {
  return CoproductEngine<C>(sigma1, sigma2)(a);
}

/// (f (x) g) applied to a two-slot tensor, for linear maps given on forests.
template <Coefficient C, class Left, class Right>
Tensor<C> tensor_map(const Tensor<C>& t, Left&& left, Right&& right) {
  Tensor<C> r;
  for (const auto& [k, c] : t) r += tensor_of<C>(left(k[0]), right(k[1])).scaled(c);
  return r;
}

/// Checks the two hypotheses under which a twisting yields a counital,
/// coassociative coproduct: eps(sigma(F)) = eps(F) and
/// Delta(sigma(F)) = (sigma (x) sigma)(Delta(F)), on every forest of degree
/// <= max_degree. `sigma` maps a forest to an element.
template <Coefficient C, class Map>
CheckReport validate_linear_map(const std::string& name, Map&& sigma, const CoproductEngine<C>& delta,
                                std::size_t max_degree) {
  CheckReport report;
  report.identity = name + ": ε∘σ = ε and Δ∘σ = (σ⊗σ)∘Δ under Δ[" + delta.sigma1().name() + "," +
                    delta.sigma2().name() + "]";
  report.degree_cap = max_degree;
  for (const auto& f : forests_up_to(max_degree)) {
    const Element<C> image = sigma(f);
    const C lhs = counit(image);
    const C rhs = f.is_empty() ? one<C>() : C();
    report.compare(lhs == rhs, f.encoding(), [&] { return to_string(lhs); }, [&] { return to_string(rhs); },
                   "counit");
    const Tensor<C> dl = delta(image);
    const Tensor<C> dr = tensor_map<C>(delta.of_forest(f), sigma, sigma);
    report.compare(dl == dr, f.encoding(), [&] { return format_tensor(dl); }, [&] { return format_tensor(dr); },
                   "comultiplicative");
  }
  return report;
}

template <Coefficient C>
CheckReport validate_twisting(const Twisting<C>& sigma, const CoproductEngine<C>& delta, std::size_t max_degree) {
  return validate_linear_map<C>(sigma.name(), [&](const Forest& f) { return sigma.apply(f); }, delta, max_degree);
}

// ---------------------------------------------------------------------------
// Antipode

/// Antipode by the graded connected recursion
///   S(F) = (eps(F) - sum' S(F')F'') / c,
/// where Delta(F) = c F (x) 1 + sum' F' (x) F'' with weight(F') < weight(F).
/// Requires every coproduct term to preserve weight (node count plus
/// generator occurrences) and the leading coefficient c to be invertible.
template <Coefficient C>
class Antipode {
 public:
  explicit Antipode(const CoproductEngine<C>& delta) : delta_(delta) {}

  Element<C> of_forest(const Forest& f) const {
    if (f.is_empty()) return unit<C>();
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Element<C> leading;
    Element<C> rest;
    for (const auto& [k, c] : delta_.of_forest(f)) {
      if (k[0].weight() + k[1].weight() != f.weight()) {
        throw AlgebraError("antipode: coproduct of " + f.encoding() + " does not preserve degree");
      }
      if (k[0].weight() == f.weight()) {
        leading.add(k[0], c);
      } else {
        rest += product(of_forest(k[0]), basis_element<C>(k[1])).scaled(c);
      }
    }
    const C lead = leading.coefficient(f);
    if (leading.size() != 1 || !is_unit(lead)) {
      throw AlgebraError("antipode: leading term of the coproduct of " + f.encoding() + " is not invertible");
    }
    Element<C> s = (-rest).scaled(one<C>() / lead);
    return memo_.emplace(f, std::move(s)).first->second;
  }

  Element<C> operator()(const Element<C>& a) const {
    return a.map_linear([&](const Forest& f) { return of_forest(f); });
  }

 private:
  const CoproductEngine<C>& delta_;
  mutable std::map<Forest, Element<C>> memo_;
};

template <Coefficient C>
Element<C> antipode(const Element<C>& a, const Twisting<C>& sigma1, const Twisting<C>& sigma2) {
  CoproductEngine<C> delta(sigma1, sigma2);
  return Antipode<C>(delta)(a);
}

// ---------------------------------------------------------------------------
// Whole-basis law checks

template <Coefficient C>
std::string pair_label(const CoproductEngine<C>& delta) {
  return "Δ[" + delta.sigma1().name() + "," + delta.sigma2().name() + "]";
}

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every forest of degree <= N.
template <Coefficient C>
CheckReport check_coassociativity(const CoproductEngine<C>& delta, std::size_t max_degree) {
  CheckReport report;
  report.identity = "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ under " + pair_label(delta);
  report.degree_cap = max_degree;
  for (const auto& f : forests_up_to(max_degree)) {
    const Tensor<C> d = delta.of_forest(f);
    const Tensor<C> lhs = delta.in_slot(d, 0);
    const Tensor<C> rhs = delta.in_slot(d, 1);
    report.compare(lhs == rhs, f.encoding(), [&] { return format_tensor(lhs); }, [&] { return format_tensor(rhs); });
  }
  return report;
}

/// Both counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
template <Coefficient C>
CheckReport check_counit(const CoproductEngine<C>& delta, std::size_t max_degree) {
  CheckReport report;
  report.identity = "(ε⊗id)∘Δ = id = (id⊗ε)∘Δ under " + pair_label(delta);
  report.degree_cap = max_degree;
  for (const auto& f : forests_up_to(max_degree)) {
    Element<C> left, right;
    for (const auto& [k, c] : delta.of_forest(f)) {
      if (k[0].is_empty()) left.add(k[1], c);
      if (k[1].is_empty()) right.add(k[0], c);
    }
    const Element<C> expected = basis_element<C>(f);
    report.compare(left == expected, f.encoding(), [&] { return format_element(left); },
                   [&] { return format_element(expected); }, "left");
    report.compare(right == expected, f.encoding(), [&] { return format_element(right); },
                   [&] { return format_element(expected); }, "right");
  }
  return report;
}

/// m(S (x) id) Delta = u eps = m(id (x) S) Delta.
template <Coefficient C>
CheckReport check_antipode(const CoproductEngine<C>& delta, std::size_t max_degree) {
  CheckReport report;
  report.identity = "m∘(S⊗id)∘Δ = u∘ε = m∘(id⊗S)∘Δ under " + pair_label(delta);
  report.degree_cap = max_degree;
  const Antipode<C> s(delta);
  const auto basis = [](const Forest& x) { return basis_element<C>(x); };
  const auto anti = [&](const Forest& x) { return s.of_forest(x); };
  for (const auto& f : forests_up_to(max_degree)) {
    const Tensor<C> d = delta.of_forest(f);
    const Element<C> expected = f.is_empty() ? unit<C>() : Element<C>();
    const Element<C> left = multiply_slots(tensor_map<C>(d, anti, basis));
    const Element<C> right = multiply_slots(tensor_map<C>(d, basis, anti));
    report.compare(left == expected, f.encoding(), [&] { return format_element(left); },
                   [&] { return format_element(expected); }, "S⊗id");
    report.compare(right == expected, f.encoding(), [&] { return format_element(right); },
                   [&] { return format_element(expected); }, "id⊗S");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generators (decorated variant H[G])

class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names) {
    for (auto& n : names) {
      if (!is_valid_generator_name(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
      names_.insert(std::move(n));
    }
  }
  bool contains(const std::string& name) const { return names_.count(name) > 0; }
  const std::set<std::string>& names() const { return names_; }

  /// The monomial consisting of the single loose generator `name`.
  template <Coefficient C>
  Element<C> generator(const std::string& name) const {
    if (!contains(name)) throw std::invalid_argument("unknown generator '" + name + "'");
    return basis_element<C>(Forest::generator(name));
  }

 private:
  std::set<std::string> names_;
};

}  // namespace ckhopf
