#pragma once

// The field Q(r, q) as reduced fractions of Laurent polynomials.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "bmwkit/ring/laurent.hpp"
#include "bmwkit/ring/laurent_io.hpp"
#include "bmwkit/ring/poly_gcd.hpp"

namespace bmwkit {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(r,q)") {}
};

/// Raised when a specialization hits a vanishing denominator.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, std::string denominator)
      : std::domain_error(what), denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

/// num/den with gcd(num, den) = 1 in Z[q^{+-1}, r^{+-1}], den a genuine
/// polynomial not divisible by q or r, and den's leading term positive.
/// Canonical form makes operator== structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
  }

  static RatFunc q(int e = 1) { return RatFunc(LaurentPoly::q(e)); }
  static RatFunc r(int e = 1) { return RatFunc(LaurentPoly::r(e)); }

  /// delta = 1 + (r - r^{-1}) / (q - q^{-1})
  static const RatFunc& delta() {
    static const RatFunc d = RatFunc(1) + RatFunc(LaurentPoly::r(1) - LaurentPoly::r(-1),
                                                  LaurentPoly::q(1) - LaurentPoly::q(-1));
    return d;
  }
  /// q - q^{-1}
  static const RatFunc& qdiff() {
    static const RatFunc z(LaurentPoly::q(1) - LaurentPoly::q(-1));
    return z;
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool depends_on_r() const { return num_.depends_on_r() || den_.depends_on_r(); }

  RatFunc operator-() const {
    RatFunc x = *this;
    x.num_ = -x.num_;
    return x;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      RatFunc x;
      x.num_ = a.num_ + b.num_;
      x.den_ = a.den_;
      if (!x.den_.is_one()) x.normalize();
      else if (x.num_.is_zero()) x.den_ = LaurentPoly(1);
      return x;
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc x;
      x.num_ = a.num_ * b.num_;
      return x;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc pow(int k) const {
    if (k < 0) return RatFunc(1) / pow(-k);
    RatFunc x;
    x.num_ = num_.pow(static_cast<unsigned>(k));
    x.den_ = den_.pow(static_cast<unsigned>(k));
    return x;  // powers of coprime polynomials stay coprime
  }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Equality by cross-multiplication; agrees with operator== on canonical
  /// values, kept for callers holding fractions built outside this class.
  static bool cross_equal(const LaurentPoly& an, const LaurentPoly& ad, const LaurentPoly& bn,
                          const LaurentPoly& bd) {
    return an * bd == bn * ad;
  }

  /// The automorphism q -> -q^{-1}, r -> r.
  RatFunc flip_q() const { return RatFunc(num_.substitute_q(-1, true), den_.substitute_q(-1, true)); }

  /// Exact value at (q0, r0).
  mpq_class specialize(const mpq_class& q0, const mpq_class& r0) const {
    if (q0 == 0 || r0 == 0) throw PoleError("specialization point must have q0, r0 nonzero", to_string(den_));
    mpq_class d = den_.evaluate(q0, r0);
    if (d == 0)
      throw PoleError("denominator vanishes at (" + q0.get_str() + ", " + r0.get_str() + "): " + to_string(den_),
                      to_string(den_));
    return num_.evaluate(q0, r0) / d;
  }

  /// Substitutes r -> -q^{2l+1}; the result does not depend on r.
  RatFunc specialize_r(int l) const {
    if (l < 1) throw std::invalid_argument("specialize_r: l must be positive");
    LaurentPoly d = den_.substitute_r(2 * l + 1, true);
    if (d.is_zero())
      throw PoleError("denominator vanishes identically under r -> -q^" + std::to_string(2 * l + 1) + ": " +
                          to_string(den_),
                      to_string(den_));
    return RatFunc(num_.substitute_r(2 * l + 1, true), std::move(d));
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    const Exponent sn = num_.min_exponents();
    const Exponent sd = den_.min_exponents();
    if (den_.is_monomial()) {
      const Term& t = den_.leading();
      LaurentPoly n = num_.shifted(-t.e.q, -t.e.r);
      mpz_class g;
      mpz_class cn = n.content();
      mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), t.c.get_mpz_t());
      if (t.c < 0) g = -g;
      num_ = n.divided_exact(g);
      mpz_class dc;
      mpz_divexact(dc.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      den_ = LaurentPoly(dc);
      return;
    }
    detail::BPoly n = detail::to_dense(num_, sn);
    detail::BPoly d = detail::to_dense(den_, sd);
    detail::BPoly g = detail::b_gcd(n, d);
    if (!(g.size() == 1 && g[0].size() == 1 && g[0][0] == 1)) {
      n = detail::b_divexact(std::move(n), g);
      d = detail::b_divexact(std::move(d), g);
    }
    num_ = detail::from_dense(n, {sn.q - sd.q, sn.r - sd.r});
    den_ = detail::from_dense(d);
    if (den_.leading().c < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

inline RatFunc pow(const RatFunc& x, int k) { return x.pow(k); }

}  // namespace bmwkit
