#pragma once

// Sparse elements of B_n: finite maps from basis indices to coefficients.

#include <map>
#include <stdexcept>
#include <utility>

#include "bmwkit/engine/field.hpp"

namespace bmwkit {

template <class C>
struct Element {
  int n = 0;
  /// basis index -> nonzero coefficient, in canonical monomial order
  std::map<int, C> terms;

  Element() = default;
  explicit Element(int n_) : n(n_) {}

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  /// Coefficient of a basis index (zero when absent).
  C coeff(int idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? C(0) : it->second;
  }

  /// this += c * x
  void add_scaled(const Element& x, const C& c) {
    check(x);
    if (bmwkit::is_zero(c)) return;
    for (const auto& [k, v] : x.terms) add_term(k, c * v);
  }
  void add_term(int k, const C& v) {
    if (bmwkit::is_zero(v)) return;
    auto [it, fresh] = terms.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (bmwkit::is_zero(it->second)) terms.erase(it);
    }
  }

  Element& operator+=(const Element& x) {
    check(x);
    for (const auto& [k, v] : x.terms) add_term(k, v);
    return *this;
  }
  Element& operator-=(const Element& x) {
    check(x);
    for (const auto& [k, v] : x.terms) add_term(k, -v);
    return *this;
  }
  Element& operator*=(const C& c) {
    if (bmwkit::is_zero(c)) {
      terms.clear();
      return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const C& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const C& c) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.n == b.n && a.terms == b.terms; }

 private:
  void check(const Element& x) const {
    if (x.n != n) throw std::invalid_argument("elements of different B_n");
  }
};

}  // namespace bmwkit
