#pragma once

// The ladder Hopf algebra K = k[x_1, x_2, ...] (the free commutative algebra
// on the augmentation ideal of the initial pointed algebra with
// endomorphism), its embedding j into H as the subalgebra of ladder trees,
// the endomorphism alpha_bar and the retraction r : H -> K.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ckhopf/hopf.hpp"

namespace ckhopf {

/// Monomial x_{i1} ... x_{ik}, stored as the sorted index multiset. The empty
/// monomial is 1 (x_0 is identified with 1). Ordered by (degree, encoding).
class LadderMonomial {
 public:
  LadderMonomial() = default;
  explicit LadderMonomial(std::vector<std::uint32_t> indices);
  /// x_n; x_0 is the unit monomial.
  static LadderMonomial x(std::uint32_t n);

  const std::vector<std::uint32_t>& indices() const { return indices_; }
  bool is_unit() const { return indices_.empty(); }
  /// Sum of indices.
  std::uint64_t degree() const { return degree_; }
  /// "1" or e.g. "x1^2*x3".
  const std::string& encoding() const { return encoding_; }

  friend LadderMonomial operator*(const LadderMonomial& a, const LadderMonomial& b);
  friend bool operator==(const LadderMonomial& a, const LadderMonomial& b) { return a.indices_ == b.indices_; }
  friend std::strong_ordering operator<=>(const LadderMonomial& a, const LadderMonomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.encoding_.compare(b.encoding_) <=> 0;
  }

 private:
  std::vector<std::uint32_t> indices_;
  std::uint64_t degree_ = 0;
  std::string encoding_ = "1";
};

using LadderTensorKey = std::pair<LadderMonomial, LadderMonomial>;

template <Coefficient C>
using LadderPoly = LinComb<LadderMonomial, C>;

template <Coefficient C>
using LadderTensor = LinComb<LadderTensorKey, C>;

/// All monomials of degree <= max_degree (partitions), ordered by degree
/// then encoding.
std::vector<LadderMonomial> ladder_monomials_up_to(std::uint64_t max_degree);

/// The ladder tree lambda^n(1) with n nodes (n >= 1).
Tree ladder_tree(std::size_t n);

template <Coefficient C>
LadderPoly<C> ladder_x(std::uint32_t n) {
  return LadderPoly<C>::monomial(LadderMonomial::x(n));
}

template <Coefficient C>
LadderPoly<C> ladder_unit() {
  return LadderPoly<C>::monomial(LadderMonomial());
}

template <Coefficient C>
LadderPoly<C> ladder_product(const LadderPoly<C>& a, const LadderPoly<C>& b) {
  LadderPoly<C> r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) r.add(ma * mb, ca * cb);
  }
  return r;
}

template <Coefficient C>
C ladder_counit(const LadderPoly<C>& p) {
  return p.coefficient(LadderMonomial());
}

template <Coefficient C>
LadderTensor<C> ladder_tensor_of(const LadderPoly<C>& a, const LadderPoly<C>& b) {
  LadderTensor<C> r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) r.add({ma, mb}, ca * cb);
  }
  return r;
}

template <Coefficient C>
LadderTensor<C> ladder_tensor_mul(const LadderTensor<C>& a, const LadderTensor<C>& b) {
  LadderTensor<C> r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) r.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  }
  return r;
}

template <Coefficient C>
std::string format_ladder(const LadderPoly<C>& p) {
  return format_lincomb(p, [](const LadderMonomial& m) { return m.encoding(); });
}

template <Coefficient C>
std::string format_ladder_tensor(const LadderTensor<C>& t) {
  return format_lincomb(t, [](const LadderTensorKey& k) { return k.first.encoding() + "⊗" + k.second.encoding(); });
}

/// Extends a coproduct given on generators x_n multiplicatively.
template <Coefficient C, class GeneratorCoproduct>
LadderTensor<C> extend_multiplicatively(const LadderPoly<C>& p, GeneratorCoproduct&& on_generator) {
  LadderTensor<C> r;
  for (const auto& [m, c] : p) {
    LadderTensor<C> t = LadderTensor<C>::monomial({LadderMonomial(), LadderMonomial()});
    for (auto n : m.indices()) t = ladder_tensor_mul(t, on_generator(n));
    r += t.scaled(c);
  }
  return r;
}

/// Delta(x_n) = sum_{i=0}^{n} x_i (x) x_{n-i}, extended as an algebra map.
template <Coefficient C>
LadderTensor<C> ladder_coproduct(const LadderPoly<C>& p) {
  return extend_multiplicatively(p, [](std::uint32_t n) {
    LadderTensor<C> t;
    for (std::uint32_t i = 0; i <= n; ++i) t.add({LadderMonomial::x(i), LadderMonomial::x(n - i)}, one<C>());
    return t;
  });
}

/// alpha_bar(1) = x_1; on monomials of positive degree every generator index
/// is shifted up by one.
template <Coefficient C>
LadderPoly<C> alpha_bar(const LadderPoly<C>& p) {
  LadderPoly<C> r;
  for (const auto& [m, c] : p) {
    if (m.is_unit()) {
      r.add(LadderMonomial::x(1), c);
      continue;
    }
    std::vector<std::uint32_t> shifted = m.indices();
    for (auto& i : shifted) ++i;
    r.add(LadderMonomial(std::move(shifted)), c);
  }
  return r;
}

/// The forest of ladder trees corresponding to a monomial.
Forest ladder_forest(const LadderMonomial& m);

/// The monomial corresponding to a forest of ladder trees, or nullopt.
std::optional<LadderMonomial> ladder_monomial_of(const Forest& f);

/// Algebra map K -> H, x_n -> lambda^n(1).
template <Coefficient C>
Element<C> j_map(const LadderPoly<C>& p) {
  Element<C> r;
  for (const auto& [m, c] : p) r.add(ladder_forest(m), c);
  return r;
}

/// Generator-level map j_0 from the initial pointed algebra: x_n -> lambda^n(1).
template <Coefficient C>
Element<C> j0_map(std::uint32_t n) {
  return basis_element<C>(ladder_forest(LadderMonomial::x(n)));
}

/// Inverse of j on the ladder subalgebra; throws AlgebraError when a term
/// involves a non-ladder forest.
template <Coefficient C>
LadderPoly<C> ladder_preimage(const Element<C>& a) {
  LadderPoly<C> r;
  for (const auto& [f, c] : a) {
    auto m = ladder_monomial_of(f);
    if (!m) throw AlgebraError("forest " + f.encoding() + " is not in the ladder subalgebra");
    r.add(*m, c);
  }
  return r;
}

template <Coefficient C>
LadderTensor<C> ladder_preimage(const Tensor<C>& t) {
  LadderTensor<C> r;
  for (const auto& [k, c] : t) {
    auto a = ladder_monomial_of(k.at(0));
    auto b = ladder_monomial_of(k.at(1));
    if (!a || !b) {
      throw AlgebraError("tensor term " + k[0].encoding() + "⊗" + k[1].encoding() + " is not in the ladder subalgebra");
    }
    r.add({*a, *b}, c);
  }
  return r;
}

/// The unique algebra map r : H -> K with r(1) = 1 and r lambda = alpha_bar r,
/// by structural recursion on canonical trees.
template <Coefficient C>
class Retraction {
 public:
  LadderPoly<C> of_forest(const Forest& f) const {
    if (!f.loose_generators().empty()) throw std::invalid_argument("retraction is defined on undecorated forests");
    LadderPoly<C> r = ladder_unit<C>();
    for (const auto& t : f.trees()) r = ladder_product(r, of_tree(t));
    return r;
  }

  LadderPoly<C> of_tree(const Tree& t) const {
    if (auto it = memo_.find(t.encoding()); it != memo_.end()) return it->second;
    LadderPoly<C> r = alpha_bar(of_forest(root_branches(t)));
    return memo_.emplace(t.encoding(), std::move(r)).first->second;
  }

  LadderPoly<C> operator()(const Element<C>& a) const {
    LadderPoly<C> r;
    for (const auto& [f, c] : a) r += of_forest(f).scaled(c);
    return r;
  }

 private:
  mutable std::map<std::string, LadderPoly<C>> memo_;
};

template <Coefficient C>
LadderPoly<C> r_map(const Element<C>& a) {
  return Retraction<C>()(a);
}

/// Coproduct on K obtained by running the twisted coproduct recursion of H
/// on ladder trees and pulling back along j. For (Identity, CounitUnit) it
/// reproduces Delta(x_n) = sum x_i (x) x_{n-i}.
template <Coefficient C>
class PulledBackLadderCoproduct {
 public:
  explicit PulledBackLadderCoproduct(const CoproductEngine<C>& delta) : delta_(delta) {}

  const LadderTensor<C>& of_generator(std::uint32_t n) const {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    LadderTensor<C> t = n == 0 ? LadderTensor<C>::monomial({LadderMonomial(), LadderMonomial()})
                               : ladder_preimage(delta_.of_tree(ladder_tree(n)));
    return memo_.emplace(n, std::move(t)).first->second;
  }

  LadderTensor<C> operator()(const LadderPoly<C>& p) const {
    return extend_multiplicatively(p, [&](std::uint32_t n) { return of_generator(n); });
  }

 private:
  const CoproductEngine<C>& delta_;
  mutable std::map<std::uint32_t, LadderTensor<C>> memo_;
};

/// (K, alpha_bar) as a Hopf target with twistings s1 = id, s2 = u eps.
template <Coefficient C>
class LadderTarget {
 public:
  using coeff_type = C;
  using value_type = LadderPoly<C>;
  using tensor_type = LadderTensor<C>;

  value_type unit() const { return ladder_unit<C>(); }
  value_type product(const value_type& a, const value_type& b) const { return ladder_product(a, b); }
  coeff_type counit(const value_type& a) const { return ladder_counit(a); }
  tensor_type coproduct(const value_type& a) const { return ladder_coproduct(a); }
  value_type gamma(const value_type& a) const { return alpha_bar(a); }
  value_type sigma1(const value_type& a) const { return a; }
  value_type sigma2(const value_type& a) const { return ladder_unit<C>().scaled(ladder_counit(a)); }
  tensor_type tensor(const value_type& a, const value_type& b) const { return ladder_tensor_of(a, b); }

  std::vector<std::tuple<value_type, value_type, coeff_type>> terms(const tensor_type& w) const {
    std::vector<std::tuple<value_type, value_type, coeff_type>> out;
    for (const auto& [k, c] : w) out.emplace_back(value_type::monomial(k.first), value_type::monomial(k.second), c);
    return out;
  }

  std::vector<value_type> basis(std::size_t max_degree) const {
    std::vector<value_type> out;
    for (const auto& m : ladder_monomials_up_to(max_degree)) out.push_back(value_type::monomial(m));
    return out;
  }

  std::string describe(const value_type& a) const { return format_ladder(a); }
  std::string describe(const tensor_type& w) const { return format_ladder_tensor(w); }
  std::string name() const { return "K"; }
};

// ---------------------------------------------------------------------------
// Well-pointed objects and the free algebra u_!(X) = F(X~)

/// X = k (+) X~ with X~ spanned by the named generators.
struct WellPointedObject {
  std::vector<std::string> generators;
};

/// The object underlying the initial pointed algebra with endomorphism,
/// truncated: basepoint x_0 and X~ = span(x_1, ..., x_N).
WellPointedObject ladder_object(std::uint32_t max_index);

/// Monomial in the free commutative algebra: sorted generator indices.
using FreeMonomial = std::vector<std::size_t>;

template <Coefficient C>
using FreePoly = LinComb<FreeMonomial, C>;

/// The free commutative algebra on X~ with the universal basepoint-preserving
/// map w : X -> F(X~).
template <Coefficient C>
class FreeAlgebra {
 public:
  explicit FreeAlgebra(WellPointedObject object) : object_(std::move(object)) {
    for (std::size_t i = 0; i < object_.generators.size(); ++i) {
      if (!index_.emplace(object_.generators[i], i).second) {
        throw std::invalid_argument("duplicate generator '" + object_.generators[i] + "'");
      }
    }
  }

  const std::vector<std::string>& generators() const { return object_.generators; }

  FreePoly<C> unit() const { return FreePoly<C>::monomial(FreeMonomial{}); }

  FreePoly<C> generator(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    return FreePoly<C>::monomial(FreeMonomial{it->second});
  }

  FreePoly<C> product(const FreePoly<C>& a, const FreePoly<C>& b) const {
    FreePoly<C> r;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        FreeMonomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        r.add(m, ca * cb);
      }
    }
    return r;
  }

  /// w(c * basepoint + sum_g c_g * g) = c * 1 + sum_g c_g * g.
  FreePoly<C> w(const C& basepoint_coeff, const std::vector<std::pair<std::string, C>>& components) const {
    FreePoly<C> r = unit().scaled(basepoint_coeff);
    for (const auto& [g, c] : components) r += generator(g).scaled(c);
    return r;
  }

  /// The unique algebra map F(X~) -> A extending the given generator images
  /// (the factorization of a basepoint-preserving f : X -> A through w).
  template <class Target>
  auto induced_map(const Target& target, const FreePoly<C>& p,
                   const std::map<std::string, typename Target::value_type>& images) const {
    typename Target::value_type r;
    for (const auto& [m, c] : p) {
      auto term = target.unit();
      for (auto i : m) {
        auto it = images.find(object_.generators[i]);
        if (it == images.end()) throw std::invalid_argument("no image for generator '" + object_.generators[i] + "'");
        term = target.product(term, it->second);
      }
      r += term.scaled(c);
    }
    return r;
  }

  std::string describe(const FreePoly<C>& p) const {
    return format_lincomb(p, [&](const FreeMonomial& m) {
      if (m.empty()) return std::string("1");
      std::string s;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) s += '*';
        s += object_.generators[m[i]];
      }
      return s;
    });
  }

 private:
  WellPointedObject object_;
  std::map<std::string, std::size_t> index_;
};

template <Coefficient C>
FreeAlgebra<C> u_shriek(WellPointedObject x) {
  return FreeAlgebra<C>(std::move(x));
}

/// Identifies F(x_1..x_N) with the truncated ladder algebra.
template <Coefficient C>
LadderPoly<C> free_to_ladder(const FreeAlgebra<C>& algebra, const FreePoly<C>& p) {
  LadderPoly<C> r;
  for (const auto& [m, c] : p) {
    std::vector<std::uint32_t> idx;
    for (auto i : m) {
      const std::string& g = algebra.generators()[i];
      if (g.size() < 2 || g[0] != 'x') throw std::invalid_argument("generator '" + g + "' is not a ladder generator");
      idx.push_back(static_cast<std::uint32_t>(std::stoul(g.substr(1))));
    }
    r.add(LadderMonomial(std::move(idx)), c);
  }
  return r;
}

/// The truncated initial pointed algebra with endomorphism: basis x_0..x_N
/// with alpha(x_n) = x_{n+1}, and the universal map w : A -> K.
struct InitialPointedAlgebra {
  std::uint32_t max_index = 0;

  std::uint32_t alpha(std::uint32_t n) const {
    if (n >= max_index) throw std::out_of_range("alpha leaves the truncated model");
    return n + 1;
  }
  /// eps(x_n) = [n == 0].
  Rational counit(std::uint32_t n) const { return n == 0 ? Rational(1) : Rational(0); }

  template <Coefficient C>
  LadderPoly<C> w(std::uint32_t n) const {
    return ladder_x<C>(n);
  }
};

}  // namespace ckhopf
