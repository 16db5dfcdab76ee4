#pragma once

// The elements x_f, y_f, E_f (script) and the symmetrizer and
// antisymmetrizer of B_n, built over the symbolic engine.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmwkit/engine/engine.hpp"
#include "bmwkit/symgroup/cosets.hpp"
#include "bmwkit/symmetrizer/coeffs.hpp"

namespace bmwkit {

using SymElement = Element<RatFunc>;

/// E_1 E_3 ... E_{2f-1} as a word.
inline GenWord e_hat_word(int f) {
  GenWord w;
  for (int j = 0; j < f; ++j) w.push_back({Gen::E, 2 * j + 1});
  return w;
}

/// x_f = sum over u^{-1}, d in H_f and sigma fixing 1..2f of
/// q^{l(u)+l(sigma)+l(d)} T_u T_sigma E^_f T_d; each summand is a basis
/// monomial, so no multiplication is needed.
template <class Field>
Element<typename Field::value_type> x_f(const Engine<Field>& eng, int f) {
  const int n = eng.n();
  if (f < 0 || 2 * f > n) throw std::invalid_argument("x_f requires 0 <= 2f <= n");
  Element<typename Field::value_type> e(n);
  const Basis& b = eng.basis();
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k].f == f) e.add_term(static_cast<int>(k), eng.field().q_pow(b[k].total_length()));
  return e;
}

/// y_f = S^_n E^_f H^_f by engine multiplication.
template <class Field>
Element<typename Field::value_type> y_f(Engine<Field>& eng, int f) {
  const int n = eng.n();
  if (f < 0 || 2 * f > n) throw std::invalid_argument("y_f requires 0 <= 2f <= n");
  auto left = eng.apply(eng.hat_sum(symmetric_group(n)), e_hat_word(f));
  return eng.mul(left, eng.hat_sum(h_f(n, f)));
}

/// Script E_f = S^_n E^_{f+1} H^_f^{3..n}; zero when f+1 > n/2.
template <class Field>
Element<typename Field::value_type> script_e(Engine<Field>& eng, int f) {
  const int n = eng.n();
  if (2 * (f + 1) > n) return eng.zero();
  auto left = eng.apply(eng.hat_sum(symmetric_group(n)), e_hat_word(f + 1));
  return eng.mul(left, eng.hat_sum(embed(h_f(n - 2, f), n, 2)));
}

/// x = sum_f c_f x_f with c_0 = 1.
inline SymElement symmetrizer(const SymbolicEngine& eng) {
  const int n = eng.n();
  if (n < 2) throw std::invalid_argument("symmetrizer requires n >= 2");
  CoeffTable t = coeff_table(n);
  SymElement x(n);
  for (int f = 0; 2 * f <= n; ++f) x.add_scaled(x_f(eng, f), t.c[static_cast<std::size_t>(f)]);
  return x;
}

/// The image of the symmetrizer under q -> -q^{-1}.
inline SymElement antisymmetrizer(const SymbolicEngine& eng) { return flip(symmetrizer(eng)); }

/// True iff y_f E_1 equals
///   b_f S^_n E^_f H^_{f-1}^{3..n} + q^{2f} S^_n E^_{f+1} H^_f^{3..n}
/// (second term zero when f = [n/2]); for f = 0 the claim is y_0 E_1 = S^_n E_1.
inline bool verify_yfE1_recursion(SymbolicEngine& eng, int f) {
  const int n = eng.n();
  if (f < 0 || 2 * f > n) throw std::invalid_argument("verify_yfE1_recursion: f out of range");
  SymElement lhs = eng.right_mul_gen(y_f(eng, f), {Gen::E, 1});
  if (f == 0) return lhs == eng.apply(eng.hat_sum(symmetric_group(n)), {{Gen::E, 1}});
  SymElement rhs = b_coeff(n, f) * script_e(eng, f - 1);
  rhs.add_scaled(script_e(eng, f), d_coeff(f));
  return lhs == rhs;
}

/// The scalar kappa with x^2 = kappa x. With by_squaring the square is
/// multiplied out; otherwise x m = rho_1(m) x (valid once x E_i = 0 and
/// x T_i = q x hold) gives x^2 = rho_1(x) x.
inline RatFunc quasi_idempotent_scalar(SymbolicEngine& eng, const SymElement& x, bool by_squaring) {
  RatFunc kappa = eng.linear_character(x, Character::rho1);
  if (!by_squaring) return kappa;
  SymElement sq = eng.mul(x, x);
  if (x.is_zero()) throw std::logic_error("zero element is not quasi-idempotent");
  const auto& [k0, c0] = *x.terms.begin();
  RatFunc scale = sq.coeff(k0) / c0;
  if (!(sq == scale * x)) throw std::logic_error("x^2 is not proportional to x");
  return scale;
}

/// Writes e = alpha * u + beta * v for elements with disjoint supports.
inline std::optional<std::pair<RatFunc, RatFunc>> decompose2(const SymElement& e, const SymElement& u,
                                                             const SymElement& v) {
  auto coeff_on = [&](const SymElement& basis_el) -> RatFunc {
    if (basis_el.is_zero()) return RatFunc();
    const auto& [k, c] = *basis_el.terms.begin();
    return e.coeff(k) / c;
  };
  RatFunc alpha = coeff_on(u), beta = coeff_on(v);
  SymElement rebuilt = alpha * u;
  rebuilt.add_scaled(v, beta);
  if (!(rebuilt == e)) return std::nullopt;
  return std::pair{alpha, beta};
}

/// True iff the supports of the given elements are pairwise disjoint.
template <class C>
bool disjoint_supports(const std::vector<Element<C>>& elems) {
  std::map<int, int> owner;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [k, c] : elems[i].terms)
      if (!owner.emplace(k, static_cast<int>(i)).second) return false;
  return true;
}

/// Ratios c_f / c_{f-1} solved from sum_f c_f x_f E_1 = 0 in the script-E
/// expansion, computed by the engine without using the closed form.
struct SolvedRatios {
  std::vector<RatFunc> ratio;  // index f = 1..n/2 (entry 0 unused)
  bool expansion_ok = true;    // every x_f E_1 lies in span(E_{f-1}, E_f)
  bool independent = true;     // the script-E elements have disjoint supports
};

inline SolvedRatios solve_c_ratios(SymbolicEngine& eng) {
  const int n = eng.n();
  const int top = n / 2;
  SolvedRatios out;
  std::vector<SymElement> scr;
  for (int f = 0; f <= top; ++f) scr.push_back(script_e(eng, f));
  {
    std::vector<SymElement> nonzero;
    for (const auto& s : scr)
      if (!s.is_zero()) nonzero.push_back(s);
    out.independent = disjoint_supports(nonzero);
  }
  // x_f E_1 = alpha_f E_{f-1} + beta_f E_f
  std::vector<RatFunc> alpha(static_cast<std::size_t>(top + 1)), beta(static_cast<std::size_t>(top + 1));
  for (int f = 0; f <= top; ++f) {
    SymElement xe = eng.right_mul_gen(x_f(eng, f), {Gen::E, 1});
    SymElement prev = f >= 1 ? scr[static_cast<std::size_t>(f - 1)] : SymElement(n);
    if (f == 0) {
      // x_0 E_1 = S^_n E_1, which is (1 + q r^{-1})^{-1} E_0 by the y_f relation
      auto d = decompose2(xe, SymElement(n), scr[0]);
      if (!d) {
        out.expansion_ok = false;
        continue;
      }
      beta[0] = d->second;
      continue;
    }
    auto d = decompose2(xe, prev, scr[static_cast<std::size_t>(f)]);
    if (!d) {
      out.expansion_ok = false;
      continue;
    }
    alpha[static_cast<std::size_t>(f)] = d->first;
    beta[static_cast<std::size_t>(f)] = d->second;
  }
  out.ratio.assign(static_cast<std::size_t>(top + 1), RatFunc());
  for (int f = 1; f <= top && out.expansion_ok; ++f) {
    if (alpha[static_cast<std::size_t>(f)].is_zero()) {
      out.expansion_ok = false;
      break;
    }
    out.ratio[static_cast<std::size_t>(f)] = -(beta[static_cast<std::size_t>(f - 1)] / alpha[static_cast<std::size_t>(f)]);
  }
  return out;
}

}  // namespace bmwkit
