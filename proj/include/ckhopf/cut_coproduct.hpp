#pragma once

// The rooted-tree coproduct computed directly from admissible cuts:
//
//   Delta(T) = 1 (x) T + T (x) 1 + sum_c P_c(T) (x) R_c(T)
//
// extended multiplicatively to forests. Shares no code with the recursive
// CoproductEngine and serves as its independent oracle.

#include "ckhopf/hopf.hpp"

namespace ckhopf {

template <Coefficient C>
Tensor<C> coproduct_ck_oracle(const Tree& t) {
  Tensor<C> r;
  r.add(TensorKey{Forest(), Forest::of(t)}, one<C>());
  r.add(TensorKey{Forest::of(t), Forest()}, one<C>());
  for (const auto& cut : admissible_cuts(t)) r.add(TensorKey{cut.pruned, Forest::of(cut.trunk)}, one<C>());
  return r;
}

template <Coefficient C>
Tensor<C> coproduct_ck_oracle(const Forest& f) {
  if (f.is_decorated()) throw std::invalid_argument("cut oracle is defined on undecorated forests only");
  Tensor<C> r = tensor_unit<C>(2);
  for (const auto& t : f.trees()) r = tensor_mul(r, coproduct_ck_oracle<C>(t));
  return r;
}

template <Coefficient C>
Tensor<C> coproduct_ck_oracle(const Element<C>& a) {
  Tensor<C> r;
  for (const auto& [f, c] : a) r += coproduct_ck_oracle<C>(f).scaled(c);
  return r;
}

}  // namespace ckhopf
