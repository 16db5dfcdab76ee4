#pragma once

// Coefficient fields for the engine: the generic field Q(r,q), and Q at a
// rational point (q0, r0).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bmwkit/ring/ratfunc.hpp"
#include "bmwkit/ring/rational.hpp"

namespace bmwkit {

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

/// Q(r,q) with symbolic q and r.
struct SymbolicField {
  using value_type = RatFunc;

  RatFunc zero() const { return RatFunc(); }
  RatFunc one() const { return RatFunc(1); }
  RatFunc q_pow(int k) const { return RatFunc::q(k); }
  RatFunc r_pow(int k) const { return RatFunc::r(k); }
  const RatFunc& delta() const { return RatFunc::delta(); }
  /// q - q^{-1}
  const RatFunc& z() const { return RatFunc::qdiff(); }
  RatFunc from(const RatFunc& x) const { return x; }
  std::string describe() const { return "Q(r,q)"; }
};

/// Q with q = q0, r = r0. Construction fails with PoleError where the
/// defining relations are singular (q0 in {0, 1, -1} or r0 = 0).
class PointField {
 public:
  using value_type = mpq_class;

  PointField(mpq_class q0, mpq_class r0) : q0_(std::move(q0)), r0_(std::move(r0)) {
    q0_.canonicalize();
    r0_.canonicalize();
    if (q0_ == 0 || q0_ == 1 || q0_ == -1)
      throw PoleError("q0 = " + q0_.get_str() + " is a pole of delta", "q - q^-1");
    if (r0_ == 0) throw PoleError("r0 must be nonzero", "r");
    z_ = q0_ - 1 / q0_;
    delta_ = RatFunc::delta().specialize(q0_, r0_);
  }

  const mpq_class& q0() const { return q0_; }
  const mpq_class& r0() const { return r0_; }

  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  mpq_class q_pow(int k) const { return LaurentPoly::power(q0_, k); }
  mpq_class r_pow(int k) const { return LaurentPoly::power(r0_, k); }
  const mpq_class& delta() const { return delta_; }
  const mpq_class& z() const { return z_; }
  /// Value of a rational function at the point (PoleError at a pole).
  mpq_class from(const RatFunc& x) const { return x.specialize(q0_, r0_); }
  std::string describe() const { return "Q at (q,r) = (" + q0_.get_str() + ", " + r0_.get_str() + ")"; }

 private:
  mpq_class q0_, r0_, z_, delta_;
};

}  // namespace bmwkit
