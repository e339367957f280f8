#include "ckhopf/json_io.hpp"

#include <stdexcept>

namespace ckhopf {

Element<Rational> element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("element JSON needs a \"terms\" array");
  }
  Element<Rational> a;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("forest") || !t["coeff"].is_string() ||
        !t["forest"].is_string()) {
      throw std::invalid_argument("element term needs string \"coeff\" and \"forest\"");
    }
    a.add(parse_forest(t["forest"].get<std::string>()), Rational::parse(t["coeff"].get<std::string>()));
  }
  return a;
}

Json basis_json(std::size_t max_degree) {
  Json degrees = Json::array();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    Json forests = Json::array();
    for (const auto& f : enumerate_forests(d)) forests.push_back(f.encoding());
    const std::size_t count = forests.size();
    degrees.push_back({{"degree", d}, {"count", count}, {"forests", std::move(forests)}});
  }
  return {{"max_degree", max_degree}, {"degrees", std::move(degrees)}};
}

}  // namespace ckhopf
