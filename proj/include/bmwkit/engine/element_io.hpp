#pragma once

// JSON form of symbolic elements:
//   {"n": 4, "terms": [{"monomial": "f=..|u=..|s=..|d=..", "coeff": {...}}, ...]}
// with terms in canonical monomial order and coefficients in the RatFunc
// JSON form.

#include <stdexcept>

#include <json.hpp>

#include "bmwkit/basis/monomial.hpp"
#include "bmwkit/engine/element.hpp"
#include "bmwkit/ring/ratfunc_io.hpp"

namespace bmwkit {

inline nlohmann::json to_json(const Element<RatFunc>& e, const Basis& basis) {
  if (e.n != basis.n()) throw std::invalid_argument("element and basis have different n");
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : e.terms)
    terms.push_back({{"monomial", basis[static_cast<std::size_t>(k)].to_string()}, {"coeff", to_json(c)}});
  return {{"n", e.n}, {"terms", terms}};
}

inline Element<RatFunc> element_from_json(const nlohmann::json& j, const Basis& basis) {
  const int n = j.at("n").get<int>();
  if (n != basis.n()) throw std::invalid_argument("element JSON has n = " + std::to_string(n));
  Element<RatFunc> e(n);
  for (const auto& t : j.at("terms")) {
    const int k = basis.index_of(Monomial::parse(t.at("monomial").get<std::string>()));
    e.add_term(k, ratfunc_from_json(t.at("coeff")));
  }
  return e;
}

}  // namespace bmwkit
