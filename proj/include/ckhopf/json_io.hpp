#pragma once

// JSON forms of elements, tensors and the export tables. Terms are emitted
// in canonical key order, so equal values always serialize to equal bytes.
//
//   element:  {"terms": [{"coeff": "-1/2", "forest": "[[]][]"}, ...]}
//   tensor:   {"arity": 2, "terms": [{"coeff": "q2 + q1", "factors": ["[]", "[]"]}, ...]}

#include "json.hpp"

#include "ckhopf/hopf.hpp"

namespace ckhopf {

using Json = nlohmann::json;

template <Coefficient C>
Json element_to_json(const Element<C>& a) {
  Json terms = Json::array();
  for (const auto& [f, c] : a) terms.push_back({{"coeff", to_string(c)}, {"forest", f.encoding()}});
  return {{"terms", std::move(terms)}};
}

template <Coefficient C>
Json tensor_to_json(const Tensor<C>& t, std::size_t arity) {
  Json terms = Json::array();
  for (const auto& [k, c] : t) {
    Json factors = Json::array();
    for (const auto& f : k) factors.push_back(f.encoding());
    terms.push_back({{"coeff", to_string(c)}, {"factors", std::move(factors)}});
  }
  return {{"arity", arity}, {"terms", std::move(terms)}};
}

/// Reads an element with rational coefficients; throws std::invalid_argument
/// (or ParseError) on malformed input.
Element<Rational> element_from_json(const Json& j);

/// {"max_degree": N, "degrees": [{"degree": d, "count": k, "forests": [...]}, ...]}
Json basis_json(std::size_t max_degree);

/// {"max_degree": N, "sigma1": ..., "sigma2": ...,
///  "rows": [{"forest": F, "degree": d, "coproduct": <tensor>}, ...]}
/// with one row per forest of degree <= N, ordered by degree then encoding.
template <Coefficient C>
Json coproduct_table_json(const CoproductEngine<C>& delta, std::size_t max_degree) {
  Json rows = Json::array();
  for (const auto& f : forests_up_to(max_degree)) {
    rows.push_back({{"forest", f.encoding()}, {"degree", f.degree()}, {"coproduct", tensor_to_json(delta.of_forest(f), 2)}});
  }
  return {{"max_degree", max_degree},
          {"sigma1", delta.sigma1().name()},
          {"sigma2", delta.sigma2().name()},
          {"rows", std::move(rows)}};
}

}  // namespace ckhopf
