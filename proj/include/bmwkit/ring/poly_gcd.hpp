#pragma once

// GCD of polynomials in Z[q, r] (non-negative exponents), via recursive
// primitive pseudo-remainder sequences with r as the main variable.

#include <gmpxx.h>

#include <cassert>
#include <utility>
#include <vector>

#include "bmwkit/ring/laurent.hpp"

namespace bmwkit::detail {

/// Dense univariate polynomial over Z, index = degree, no trailing zeros.
using UPoly = std::vector<mpz_class>;
/// Dense polynomial in r whose coefficients are UPoly in q.
using BPoly = std::vector<UPoly>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly u_add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

inline UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

inline UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline UPoly u_scale(const UPoly& a, const mpz_class& k) {
  if (k == 0) return {};
  UPoly out = a;
  for (auto& c : out) c *= k;
  return out;
}

inline mpz_class u_content(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline UPoly u_divexact(const UPoly& a, const mpz_class& k) {
  UPoly out = a;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return out;
}

/// Primitive part with positive leading coefficient.
inline UPoly u_primitive(const UPoly& a) {
  if (a.empty()) return a;
  mpz_class g = u_content(a);
  if (a.back() < 0) g = -g;
  return u_divexact(a, g);
}

/// Exact division a / b in Z[q]; returns false if b does not divide a.
inline bool u_divides(const UPoly& a, const UPoly& b, UPoly* quotient) {
  assert(!b.empty());
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  UPoly rem = a;
  UPoly quo(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  for (int i = deg(rem); i >= deg(b); --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lb.get_mpz_t());
    quo[i - deg(b)] = t;
    for (int j = 0; j <= deg(b); ++j) rem[i - deg(b) + j] -= t * b[j];
  }
  trim(rem);
  if (!rem.empty()) return false;
  trim(quo);
  if (quotient) *quotient = std::move(quo);
  return true;
}

/// Pseudo-remainder of a by b (deg b >= 0).
inline UPoly u_prem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const mpz_class& lb = b.back();
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

inline UPoly u_gcd(UPoly a, UPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (a.empty()) return a;
    if (a.back() < 0) a = u_scale(a, -1);
    return a;
  }
  mpz_class ca = u_content(a), cb = u_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = u_primitive(a);
  b = u_primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) return {cg};
    UPoly r = u_prem(a, b);
    a = std::move(b);
    b = u_primitive(r);
  }
  return u_scale(u_primitive(a), cg);
}

// ----- bivariate -----

inline UPoly b_content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? c : u_gcd(g, c);
    if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
  }
  if (!g.empty() && g.back() < 0) g = u_scale(g, -1);
  return g;
}

inline BPoly b_div_u(const BPoly& a, const UPoly& c) {
  BPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool ok = u_divides(a[i], c, &out[i]);
    assert(ok);
    (void)ok;
  }
  return out;
}

inline BPoly b_mul_u(const BPoly& a, const UPoly& c) {
  BPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = u_mul(a[i], c);
  trim(out);
  return out;
}

inline BPoly b_primitive(const BPoly& a) {
  if (a.empty()) return a;
  UPoly c = b_content(a);
  BPoly out = b_div_u(a, c);
  // normalise so the leading coefficient's leading integer is positive
  if (out.back().back() < 0)
    for (auto& x : out) x = u_scale(x, -1);
  return out;
}

inline BPoly b_prem(BPoly a, const BPoly& b) {
  const int db = deg(b);
  const UPoly& lb = b.back();
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    UPoly la = a.back();
    for (auto& c : a) c = u_mul(c, lb);
    for (int j = 0; j <= db; ++j) a[shift + j] = u_sub(a[shift + j], u_mul(la, b[j]));
    trim(a);
  }
  return a;
}

/// Exact division of bivariate polynomials; b must divide a.
inline BPoly b_divexact(BPoly a, const BPoly& b) {
  const int db = deg(b);
  BPoly quo(std::max(0, deg(a) - db + 1));
  while (!a.empty() && deg(a) >= db) {
    const int shift = deg(a) - db;
    UPoly t;
    bool ok = u_divides(a.back(), b.back(), &t);
    assert(ok);
    (void)ok;
    quo[shift] = t;
    for (int j = 0; j <= db; ++j) a[shift + j] = u_sub(a[shift + j], u_mul(t, b[j]));
    trim(a);
  }
  assert(a.empty());
  trim(quo);
  return quo;
}

inline BPoly b_gcd(const BPoly& a0, const BPoly& b0) {
  if (a0.empty()) return b0;
  if (b0.empty()) return a0;
  UPoly cg = u_gcd(b_content(a0), b_content(b0));
  BPoly a = b_primitive(a0), b = b_primitive(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = BPoly{UPoly{1}};
      break;
    }
    BPoly r = b_prem(a, b);
    a = std::move(b);
    b = r.empty() ? r : b_primitive(r);
  }
  return b_mul_u(b_primitive(a), cg);
}

/// Dense form of p * q^{-min.q} r^{-min.r}; exponents must be shifted first.
inline BPoly to_dense(const LaurentPoly& p, Exponent shift) {
  BPoly out;
  for (const auto& t : p.terms()) {
    const int rq = t.e.q - shift.q;
    const int rr = t.e.r - shift.r;
    if (static_cast<int>(out.size()) <= rr) out.resize(rr + 1);
    if (static_cast<int>(out[rr].size()) <= rq) out[rr].resize(rq + 1);
    out[rr][rq] = t.c;
  }
  for (auto& c : out) trim(c);
  trim(out);
  return out;
}

inline LaurentPoly from_dense(const BPoly& p, Exponent shift = {}) {
  std::vector<Term> ts;
  for (std::size_t rr = 0; rr < p.size(); ++rr)
    for (std::size_t qq = 0; qq < p[rr].size(); ++qq)
      if (p[rr][qq] != 0) ts.push_back({{static_cast<int>(qq) + shift.q, static_cast<int>(rr) + shift.r}, p[rr][qq]});
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace bmwkit::detail
