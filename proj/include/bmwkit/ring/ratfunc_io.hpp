#pragma once

// Text and JSON forms of rational functions. The canonical string is
// "num" when the denominator is 1 and "(num)/(den)" otherwise; the JSON
// form lists [q-exponent, r-exponent, coefficient] triples, with the
// coefficient a JSON integer when it fits in 64 bits and a decimal string
// otherwise.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bmwkit/ring/laurent_io.hpp"
#include "bmwkit/ring/ratfunc.hpp"

namespace bmwkit {

inline std::string to_string(const RatFunc& x) {
  if (x.den().is_one()) return to_string(x.num());
  return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

inline RatFunc parse_ratfunc(std::string_view s) {
  detail::PolyReader rd(s);
  if (rd.accept('(')) {
    LaurentPoly num = rd.poly();
    rd.expect(')');
    if (rd.done()) return RatFunc(std::move(num));
    rd.expect('/');
    rd.expect('(');
    LaurentPoly den = rd.poly();
    rd.expect(')');
    if (!rd.done()) rd.fail("trailing input");
    if (den.is_zero()) throw DivisionByZero();
    return RatFunc(std::move(num), std::move(den));
  }
  LaurentPoly p = rd.poly();
  if (!rd.done()) rd.fail("trailing input");
  return RatFunc(std::move(p));
}

namespace detail {

inline nlohmann::json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

inline mpz_class coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

inline nlohmann::json poly_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) arr.push_back({t.e.q, t.e.r, coeff_json(t.c)});
  return arr;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  std::vector<Term> ts;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [a,b,c]");
    ts.push_back({{t[0].get<int>(), t[1].get<int>()}, coeff_from_json(t[2])});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace detail

inline nlohmann::json to_json(const RatFunc& x) {
  return {{"num", detail::poly_json(x.num())}, {"den", detail::poly_json(x.den())}};
}

inline RatFunc ratfunc_from_json(const nlohmann::json& j) {
  LaurentPoly den = detail::poly_from_json(j.at("den"));
  if (den.is_zero()) throw DivisionByZero();
  return RatFunc(detail::poly_from_json(j.at("num")), std::move(den));
}

}  // namespace bmwkit
