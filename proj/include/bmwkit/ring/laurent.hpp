#pragma once

// Sparse Laurent polynomials in two commuting variables q, r with
// arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bmwkit {

/// Raised when an exponent leaves the range of a machine int.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline int checked_add(int a, int b) {
  int out;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("Laurent exponent overflow");
  return out;
}

inline int checked_mul(int a, int b) {
  int out;
  if (__builtin_mul_overflow(a, b, &out)) throw ExponentOverflow("Laurent exponent overflow");
  return out;
}

}  // namespace detail

/// Exponent pair (q-exponent, r-exponent).
struct Exponent {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Term {
  Exponent e;
  mpz_class c;
  friend bool operator==(const Term& a, const Term& b) { return a.e == b.e && a.c == b.c; }
};

/// Element of Z[q^{+-1}, r^{+-1}].
///
/// Terms are kept sorted by exponent in *descending* (q, r) order with no
/// zero coefficients, so the term vector itself is the canonical form.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({{0, 0}, mpz_class(c)});
  }
  explicit LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
  }

  static LaurentPoly monomial(int qe, int re, const mpz_class& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({{qe, re}, c});
    return p;
  }
  static LaurentPoly q(int e = 1) { return monomial(e, 0); }
  static LaurentPoly r(int e = 1) { return monomial(0, e); }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::vector<Term> ts) {
    LaurentPoly p;
    p.terms_ = std::move(ts);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].e == Exponent{} && terms_[0].c == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exponent{}); }
  bool depends_on_r() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.e.r != 0; });
  }
  /// Largest term under the (q, r) lexicographic order.
  const Term& leading() const { return terms_.front(); }

  Exponent min_exponents() const {
    Exponent m{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const auto& t : terms_) {
      m.q = std::min(m.q, t.e.q);
      m.r = std::min(m.r, t.e.r);
    }
    return m;
  }
  Exponent max_exponents() const {
    Exponent m{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
    for (const auto& t : terms_) {
      m.q = std::max(m.q, t.e.q);
      m.r = std::max(m.r, t.e.r);
    }
    return m;
  }

  /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  LaurentPoly shifted(int dq, int dr) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
      t.e.q = detail::checked_add(t.e.q, dq);
      t.e.r = detail::checked_add(t.e.r, dr);
    }
    return p;
  }

  LaurentPoly divided_exact(const mpz_class& k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.times_term(b.terms_[0]);
    if (a.is_monomial()) return b.times_term(a.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        out.push_back({{detail::checked_add(x.e.q, y.e.q), detail::checked_add(x.e.r, y.e.r)}, x.c * y.c});
    return from_terms(std::move(out));
  }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Substitutes q -> sign * q^{qmul} (the r exponent is left alone).
  LaurentPoly substitute_q(int qmul, bool negate) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      mpz_class c = t.c;
      if (negate && (t.e.q % 2 != 0)) c = -c;
      out.push_back({{detail::checked_mul(t.e.q, qmul), t.e.r}, c});
    }
    return from_terms(std::move(out));
  }

  /// Substitutes r -> rsign * q^{qexp}, giving a polynomial in q alone.
  LaurentPoly substitute_r(int qexp, bool negate) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      mpz_class c = t.c;
      if (negate && (t.e.r % 2 != 0)) c = -c;
      out.push_back({{detail::checked_add(t.e.q, detail::checked_mul(t.e.r, qexp)), 0}, c});
    }
    return from_terms(std::move(out));
  }

  /// Evaluates at rational (q0, r0); both must be nonzero when negative
  /// exponents occur.
  mpq_class evaluate(const mpq_class& q0, const mpq_class& r0) const {
    mpq_class sum = 0;
    for (const auto& t : terms_) sum += mpq_class(t.c) * power(q0, t.e.q) * power(r0, t.e.r);
    return sum;
  }

  static mpq_class power(const mpq_class& x, int e) {
    if (e == 0) return 1;
    mpq_class base = x;
    if (e < 0) {
      if (base == 0) throw std::domain_error("zero raised to a negative power");
      base = 1 / base;
    }
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e));
    out.canonicalize();
    return out;
  }

 private:
  std::vector<Term> terms_;

  static bool desc(const Term& a, const Term& b) { return a.e > b.e; }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), desc);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().e == t.e) {
        out.back().c += t.c;
      } else {
        if (!out.empty() && out.back().c == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    terms_ = std::move(out);
  }

  LaurentPoly times_term(const Term& m) const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      p.terms_.push_back({{detail::checked_add(t.e.q, m.e.q), detail::checked_add(t.e.r, m.e.r)}, t.c * m.c});
    return p;
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly out;
    out.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->e > j->e)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->e > i->e) {
        out.terms_.push_back({j->e, subtract ? mpz_class(-j->c) : j->c});
        ++j;
      } else {
        mpz_class c = subtract ? mpz_class(i->c - j->c) : mpz_class(i->c + j->c);
        if (c != 0) out.terms_.push_back({i->e, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }
};

}  // namespace bmwkit
