#pragma once

// Closed-form coefficients of the symmetrizer x = sum_f c_f x_f.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmwkit/ring/ratfunc.hpp"
#include "bmwkit/ring/ratfunc_io.hpp"

namespace bmwkit {

namespace detail {

inline void check_nf(int n, int f) {
  if (n < 1 || f < 1 || 2 * f > n) throw std::invalid_argument("need 1 <= f <= n/2");
}

/// sum_{k=0}^{m-1} q^{2k}
inline RatFunc q_square_sum(int m) {
  LaurentPoly s;
  for (int k = 0; k < m; ++k) s += LaurentPoly::q(2 * k);
  return RatFunc(s);
}

/// r q^{2n-2f-2} - q^{-1}
inline RatFunc ratio_denominator(int n, int f) {
  return RatFunc(LaurentPoly::monomial(2 * n - 2 * f - 2, 1) - LaurentPoly::q(-1));
}

/// 1 + q r^{-1}
inline RatFunc one_plus_q_rinv() { return RatFunc(LaurentPoly(1) + LaurentPoly::monomial(1, -1)); }

}  // namespace detail

/// c_f / c_{f-1} = -(q^{4f-3} - q^{2f-3}) / (r q^{2n-2f-2} - q^{-1}).
inline RatFunc c_ratio(int n, int f) {
  detail::check_nf(n, f);
  RatFunc num(LaurentPoly::q(4 * f - 3) - LaurentPoly::q(2 * f - 3));
  return -(num / detail::ratio_denominator(n, f));
}

/// The same ratio as -(q - q^{-1}) q^{2f-2} (sum_{k<f} q^{2k}) / (r q^{2n-2f-2} - q^{-1}).
inline RatFunc c_ratio_sum_form(int n, int f) {
  detail::check_nf(n, f);
  return -(RatFunc::qdiff() * RatFunc::q(2 * f - 2) * detail::q_square_sum(f) / detail::ratio_denominator(n, f));
}

/// The flipped ratio c_f(r,-q^{-1}) / c_{f-1}(r,-q^{-1}) in the form
/// q^{3-4f} (1 - q^{2f}) / (q + r q^{2+2f-2n}).
inline RatFunc flipped_ratio_closed_form(int n, int f) {
  detail::check_nf(n, f);
  RatFunc num(LaurentPoly::q(3 - 4 * f) - LaurentPoly::q(3 - 2 * f));
  return num / RatFunc(LaurentPoly::q(1) + LaurentPoly::monomial(2 + 2 * f - 2 * n, 1));
}

/// a_0 = 1, a_i = a_{i-1} sum_{k<i} q^{2k}
inline RatFunc a_coeff(int f) {
  RatFunc a(1);
  for (int i = 1; i <= f; ++i) a *= detail::q_square_sum(i);
  return a;
}

/// b_0 = 0, b_f = (1 + q r^{-1})(r q^{2n-2f-2} - q^{-1}) / (q - q^{-1})
inline RatFunc b_coeff(int n, int f) {
  if (f == 0) return RatFunc();
  detail::check_nf(n, f);
  return detail::one_plus_q_rinv() * detail::ratio_denominator(n, f) / RatFunc::qdiff();
}

/// d_f = q^{2f}
inline RatFunc d_coeff(int f) { return RatFunc::q(2 * f); }

struct CoeffTable {
  int n = 0;
  std::vector<RatFunc> c, a, b, d;

  nlohmann::json to_json() const {
    auto strings = [](const std::vector<RatFunc>& v) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& x : v) arr.push_back(bmwkit::to_string(x));
      return arr;
    };
    return {{"n", n}, {"normalization", "c0=1"}, {"c", strings(c)}, {"a", strings(a)}, {"b", strings(b)}, {"d", strings(d)}};
  }
};

/// c_f with c_0 = 1, together with a_f, b_f, d_f, for f = 0..n/2.
inline CoeffTable coeff_table(int n) {
  if (n < 1) throw std::invalid_argument("coeff_table: n must be positive");
  CoeffTable t;
  t.n = n;
  for (int f = 0; 2 * f <= n; ++f) {
    t.c.push_back(f == 0 ? RatFunc(1) : t.c.back() * c_ratio(n, f));
    t.a.push_back(a_coeff(f));
    t.b.push_back(b_coeff(n, f));
    t.d.push_back(d_coeff(f));
  }
  return t;
}

/// c_ratio with q -> -q^{-1}, then r -> -q^{2l+1}, for n = l + 1.
inline RatFunc specialized_ratio(int l, int f) {
  if (l < 1) throw std::invalid_argument("specialized_ratio: l must be positive");
  return c_ratio(l + 1, f).flip_q().specialize_r(l);
}

}  // namespace bmwkit
