#pragma once

// Verification suites: the defining relations as operator identities, the
// coset and hat-sum identities used to derive the symmetrizer, the
// symmetrizer properties themselves, the specialization r = -q^{2l+1}, and
// the numeric oracle. Each suite appends named checks to a Report.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bmwkit/oracle/oracle.hpp"
#include "bmwkit/symmetrizer/symmetrizer.hpp"
#include "bmwkit/verify/report.hpp"

namespace bmwkit::verify {

/// A linear combination of generator words.
using LinWord = std::vector<std::pair<RatFunc, GenWord>>;

struct Relation {
  std::string family;  // display name shared by the instances
  LinWord lhs, rhs;
};

/// Every instance of the defining relations of B_n, grouped by family.
inline std::vector<Relation> defining_relations(int n) {
  std::vector<Relation> out;
  const RatFunc one(1);
  auto T = [](int i) { return Gen{Gen::T, i}; };
  auto Ti = [](int i) { return Gen{Gen::Tinv, i}; };
  auto E = [](int i) { return Gen{Gen::E, i}; };
  const RatFunc z = RatFunc::qdiff();
  for (int i = 1; i < n; ++i) {
    out.push_back({"T_i - T_i^-1 = (q - q^-1)(1 - E_i)", {{one, {T(i)}}, {-one, {Ti(i)}}}, {{z, {}}, {-z, {E(i)}}}});
    out.push_back({"T_i T_i^-1 = 1", {{one, {T(i), Ti(i)}}}, {{one, {}}}});
    out.push_back({"E_i^2 = delta E_i", {{one, {E(i), E(i)}}}, {{RatFunc::delta(), {E(i)}}}});
    out.push_back({"E_i T_i = T_i E_i = r^-1 E_i", {{one, {E(i), T(i)}}}, {{RatFunc::r(-1), {E(i)}}}});
    out.push_back({"E_i T_i = T_i E_i = r^-1 E_i", {{one, {T(i), E(i)}}}, {{RatFunc::r(-1), {E(i)}}}});
    for (int j = i + 2; j < n; ++j) {
      out.push_back({"T_i T_j = T_j T_i for |i-j| > 1", {{one, {T(i), T(j)}}}, {{one, {T(j), T(i)}}}});
    }
    if (i + 1 < n) {
      const int k = i + 1;
      out.push_back({"T_i T_i+1 T_i = T_i+1 T_i T_i+1", {{one, {T(i), T(k), T(i)}}}, {{one, {T(k), T(i), T(k)}}}});
      out.push_back({"E_i E_i+1 E_i = E_i, E_i+1 E_i E_i+1 = E_i+1", {{one, {E(i), E(k), E(i)}}}, {{one, {E(i)}}}});
      out.push_back({"E_i E_i+1 E_i = E_i, E_i+1 E_i E_i+1 = E_i+1", {{one, {E(k), E(i), E(k)}}}, {{one, {E(k)}}}});
      out.push_back({"T_i T_i+1 E_i = E_i+1 E_i, T_i+1 T_i E_i+1 = E_i E_i+1", {{one, {T(i), T(k), E(i)}}}, {{one, {E(k), E(i)}}}});
      out.push_back({"T_i T_i+1 E_i = E_i+1 E_i, T_i+1 T_i E_i+1 = E_i E_i+1", {{one, {T(k), T(i), E(k)}}}, {{one, {E(i), E(k)}}}});
      out.push_back({"E_i T_i+1 E_i = r E_i, E_i+1 T_i E_i+1 = r E_i+1", {{one, {E(i), T(k), E(i)}}}, {{RatFunc::r(1), {E(i)}}}});
      out.push_back({"E_i T_i+1 E_i = r E_i, E_i+1 T_i E_i+1 = r E_i+1", {{one, {E(k), T(i), E(k)}}}, {{RatFunc::r(1), {E(k)}}}});
    }
  }
  return out;
}

/// Applies a linear combination of words to e from the right.
inline SymElement apply_lin(SymbolicEngine& eng, const SymElement& e, const LinWord& w) {
  SymElement out = eng.zero();
  for (const auto& [c, word] : w) out.add_scaled(eng.apply(e, word), c);
  return out;
}

namespace detail {

inline std::string join_words(const GenWord& w) {
  std::string s;
  for (const Gen& g : w) s += g.to_string();
  return s.empty() ? "1" : s;
}

/// Basis indices to test: all of them for small n, otherwise a seeded sample.
inline std::vector<int> monomial_sample(std::size_t size, bool exhaustive, int samples, std::uint64_t seed) {
  std::vector<int> out;
  if (exhaustive || static_cast<std::size_t>(samples) >= size) {
    for (std::size_t k = 0; k < size; ++k) out.push_back(static_cast<int>(k));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < samples) chosen.insert(static_cast<int>(rng() % size));
  return {chosen.begin(), chosen.end()};
}

/// A sparse element with a few terms and small Laurent coefficients.
inline SymElement random_element(const SymbolicEngine& eng, std::mt19937_64& rng, int terms) {
  SymElement e = eng.zero();
  const auto size = eng.basis().size();
  for (int t = 0; t < terms; ++t) {
    const int k = static_cast<int>(rng() % size);
    const int qe = static_cast<int>(rng() % 5) - 2;
    const int re = static_cast<int>(rng() % 3) - 1;
    const long c = static_cast<long>(rng() % 7) - 3;
    e.add_term(k, RatFunc(LaurentPoly::monomial(qe, re, c == 0 ? 1 : c) + LaurentPoly(1)));
  }
  return e;
}

/// hat(S) for S in S_n, computed as a product of hat-sums by the engine.
inline SymElement hat_product(SymbolicEngine& eng, const std::vector<CosetSet>& factors) {
  SymElement acc = eng.identity();
  for (const CosetSet& s : factors) acc = eng.mul(acc, eng.hat_sum(s));
  return acc;
}

/// All compositions of n with positive parts, in lexicographic order.
inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  std::function<void(int, Composition&)> rec = [&](int rest, Composition& cur) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, cur);
      cur.pop_back();
    }
  };
  Composition cur;
  rec(n, cur);
  return out;
}

inline std::string comp_str(const Composition& mu) {
  std::string s = "(";
  for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
  return s + ")";
}

/// S_1 x ... x S_1 on the first 2f points times S_{n-2f}: the composition
/// (1^{2f}, n-2f), dropping a trailing zero part.
inline Composition ones_then(int f, int n) {
  Composition mu(static_cast<std::size_t>(2 * f), 1);
  if (n > 2 * f) mu.push_back(n - 2 * f);
  return mu;
}
inline Composition twos_then(int f, int n) {
  Composition mu(static_cast<std::size_t>(f), 2);
  if (n > 2 * f) mu.push_back(n - 2 * f);
  return mu;
}

inline RatFunc poincare_square_sum(int n) {
  LaurentPoly s;
  for (const Perm& w : all_perms(n)) s += LaurentPoly::q(2 * w.length());
  return RatFunc(s);
}

}  // namespace detail

/// Defining relations as operator identities on basis monomials,
/// cyclicity of the normal-form words, and the structural properties of
/// multiplication, bar and flip on random elements.
inline void relations_suite(SymbolicEngine& eng, Report& rep, std::uint64_t seed, int samples = 200) {
  const int n = eng.n();
  const std::string suite = "relations n=" + std::to_string(n);
  const auto mons = detail::monomial_sample(eng.basis().size(), n <= 4, samples, seed);
  const auto rels = defining_relations(n);

  std::vector<std::string> families;
  for (const auto& r : rels)
    if (std::find(families.begin(), families.end(), r.family) == families.end()) families.push_back(r.family);
  for (const std::string& fam : families) {
    rep.check(suite, fam + " on " + std::to_string(mons.size()) + " monomials", [&]() -> Verdict {
      for (const auto& r : rels) {
        if (r.family != fam) continue;
        for (int k : mons) {
          SymElement m = eng.monomial(k);
          if (!(apply_lin(eng, m, r.lhs) == apply_lin(eng, m, r.rhs)))
            return {false, "fails at " + eng.basis()[static_cast<std::size_t>(k)].to_string() + " * " +
                               detail::join_words(r.lhs.front().second)};
        }
      }
      return true;
    });
  }

  rep.check(suite, "1 * canonical_word(m) = m for every basis monomial", [&]() -> Verdict {
    for (std::size_t k = 0; k < eng.basis().size(); ++k)
      if (!(eng.word(eng.basis().word(k)) == eng.monomial(static_cast<int>(k))))
        return {false, eng.basis()[k].to_string()};
    return true;
  });

  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  const int trials = n <= 4 ? 5 : 2;
  std::vector<std::array<SymElement, 3>> triples;
  for (int t = 0; t < trials; ++t)
    triples.push_back({detail::random_element(eng, rng, 3), detail::random_element(eng, rng, 3),
                       detail::random_element(eng, rng, 2)});

  rep.check(suite, "associativity on random elements", [&]() -> bool {
    for (const auto& [a, b, c] : triples)
      if (!(eng.mul(eng.mul(a, b), c) == eng.mul(a, eng.mul(b, c)))) return false;
    return true;
  });
  rep.check(suite, "bar(ab) = bar(b) bar(a) and bar(bar(a)) = a", [&]() -> bool {
    for (const auto& [a, b, c] : triples) {
      if (!(eng.bar(eng.mul(a, b)) == eng.mul(eng.bar(b), eng.bar(a)))) return false;
      if (!(eng.bar(eng.bar(a)) == a)) return false;
    }
    return true;
  });
  rep.check(suite, "flip(ab) = flip(a) flip(b) and flip(flip(a)) = a", [&]() -> bool {
    for (const auto& [a, b, c] : triples) {
      if (!(flip(eng.mul(a, b)) == eng.mul(flip(a), flip(b)))) return false;
      if (!(flip(flip(a)) == a)) return false;
    }
    return true;
  });
  rep.check(suite, "hat(S_n) = 1 + q T_1 + ... is bar-invariant", [&]() -> bool {
    SymElement s = eng.hat_sum(symmetric_group(n));
    return eng.bar(s) == s;
  });
}

/// The coset factorizations and hat-sum identities leading to the
/// symmetrizer coefficients.
inline void lemmas_suite(SymbolicEngine& eng, Report& rep) {
  const int n = eng.n();
  const std::string suite = "lemmas n=" + std::to_string(n);
  const CosetSet sn = symmetric_group(n);
  const SymElement sn_hat = eng.hat_sum(sn);
  const auto comps = detail::compositions(n);

  rep.check(suite, "S_n = S_mu D_mu, length additive, all mu", [&]() -> Verdict {
    for (const auto& mu : comps)
      if (!check_length_additive_factorization(sn, young_subgroup(mu), coset_reps(mu)))
        return {false, "mu = " + detail::comp_str(mu)};
    return true;
  });
  rep.check(suite, "hat(S_n) = hat(S_mu) hat(D_mu), all mu", [&]() -> Verdict {
    for (const auto& mu : comps)
      if (!(detail::hat_product(eng, {young_subgroup(mu), coset_reps(mu)}) == sn_hat))
        return {false, "mu = " + detail::comp_str(mu)};
    return true;
  });
  rep.check(suite, "hat(S_n) = hat(D_mu^-1) hat(S_mu) and bar exchanges the sides, all mu", [&]() -> Verdict {
    for (const auto& mu : comps) {
      const CosetSet dinv = inverse_set(coset_reps(mu));
      if (!check_length_additive_factorization(sn, dinv, young_subgroup(mu)))
        return {false, "set, mu = " + detail::comp_str(mu)};
      SymElement left = detail::hat_product(eng, {dinv, young_subgroup(mu)});
      if (!(left == sn_hat)) return {false, "hat, mu = " + detail::comp_str(mu)};
      if (!(eng.bar(detail::hat_product(eng, {young_subgroup(mu), coset_reps(mu)})) == left))
        return {false, "bar, mu = " + detail::comp_str(mu)};
    }
    return true;
  });
  rep.check(suite, "hat(D_lambda) = prod hat(D_nu^i) hat(D_mu) for refinements lambda of mu", [&]() -> Verdict {
    for (const auto& mu : comps) {
      // refine every part of mu in every possible way
      std::vector<std::vector<Composition>> choices;
      for (int p : mu) choices.push_back(detail::compositions(p));
      std::vector<std::size_t> idx(mu.size(), 0);
      while (true) {
        Composition lambda;
        std::vector<CosetSet> factors;
        int offset = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
          const Composition& nu = choices[i][idx[i]];
          lambda.insert(lambda.end(), nu.begin(), nu.end());
          factors.push_back(embed(coset_reps(nu), n, offset));
          offset += mu[i];
        }
        const CosetSet d_lambda = coset_reps(lambda);
        CosetSet prod = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) prod = set_product(prod, factors[i]);
        if (!check_length_additive_factorization(d_lambda, prod, coset_reps(mu)))
          return {false, "set, lambda = " + detail::comp_str(lambda) + ", mu = " + detail::comp_str(mu)};
        factors.push_back(coset_reps(mu));
        if (!(detail::hat_product(eng, factors) == eng.hat_sum(d_lambda)))
          return {false, "hat, lambda = " + detail::comp_str(lambda) + ", mu = " + detail::comp_str(mu)};
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
    return true;
  });

  rep.check(suite, "D_(1,n-1) = { s_1 s_2 ... s_{i-1} | i = 1..n }", [&]() -> bool {
    std::vector<Perm> v;
    Perm acc(n);
    v.push_back(acc);
    for (int i = 1; i < n; ++i) {
      acc = acc.times_simple(i);
      v.push_back(acc);
    }
    std::sort(v.begin(), v.end());
    return coset_reps({1, n - 1}).elements == v;
  });
  rep.check(suite, "hat(S_n) E_i = hat(S_n) E_1 T_2..T_i T_1..T_{i-1}, all i", [&]() -> Verdict {
    for (int i = 1; i < n; ++i) {
      GenWord w{{Gen::E, 1}};
      for (int k = 2; k <= i; ++k) w.push_back({Gen::T, k});
      for (int k = 1; k < i; ++k) w.push_back({Gen::T, k});
      if (!(eng.apply(sn_hat, {{Gen::E, i}}) == eng.apply(sn_hat, w))) return {false, "i = " + std::to_string(i)};
    }
    return true;
  });
  rep.check(suite, "hat(S_n) hat(D_(1,n-1)) = [n]_{q^2} hat(S_n) + (1-q^2)/(q^-1 r+1) hat(S_n) E_1 hat(D_(2,n-2))",
            [&]() -> bool {
              SymElement lhs = eng.mul(sn_hat, eng.hat_sum(coset_reps({1, n - 1})));
              SymElement rhs = bmwkit::detail::q_square_sum(n) * sn_hat;
              const RatFunc c = RatFunc(LaurentPoly(1) - LaurentPoly::q(2)) /
                                RatFunc(LaurentPoly::monomial(-1, 1) + LaurentPoly(1));
              rhs.add_scaled(eng.mul(eng.apply(sn_hat, {{Gen::E, 1}}), eng.hat_sum(coset_reps({2, n - 2}))), c);
              return lhs == rhs;
            });
  rep.check(suite, "(1 + q T_i) T_i = (1 + q T_i)(q + (1-q^2)/(r+q) E_i), all i", [&]() -> Verdict {
    const RatFunc c = RatFunc(LaurentPoly(1) - LaurentPoly::q(2)) / RatFunc(LaurentPoly::r(1) + LaurentPoly::q(1));
    for (int i = 1; i < n; ++i) {
      SymElement a = eng.identity();
      a.add_scaled(eng.word({{Gen::T, i}}), RatFunc::q(1));
      SymElement rhs = RatFunc::q(1) * a;
      rhs.add_scaled(eng.apply(a, {{Gen::E, i}}), c);
      if (!(eng.apply(a, {{Gen::T, i}}) == rhs)) return {false, "i = " + std::to_string(i)};
    }
    return true;
  });

  for (int f = 1; 2 * f <= n; ++f) {
    const std::string fs = " (f=" + std::to_string(f) + ")";
    const CosetSet hf = h_f(n, f);
    rep.check(suite, "|H_f| = n!/(2^f f! (n-2f)!)" + fs, [&]() -> bool {
      std::size_t num = 1;
      for (int k = 2; k <= n; ++k) num *= static_cast<std::size_t>(k);
      std::size_t den = 1;
      for (int k = 1; k <= f; ++k) den *= static_cast<std::size_t>(2 * k);
      for (int k = 2; k <= n - 2 * f; ++k) den *= static_cast<std::size_t>(k);
      return hf.size() == num / den;
    });
    const CosetSet hf2f = embed(h_f(2 * f, f), n, 0);
    const CosetSet d_2f = coset_reps(n > 2 * f ? Composition{2 * f, n - 2 * f} : Composition{n});
    rep.check(suite, "H_f(n) = H_f(2f) D_(2f,n-2f), set and hat" + fs, [&]() -> Verdict {
      if (!check_length_additive_factorization(hf, hf2f, d_2f)) return {false, "set"};
      if (!(detail::hat_product(eng, {hf2f, d_2f}) == eng.hat_sum(hf))) return {false, "hat"};
      return true;
    });

    rep.check(suite, "H_f partition into classes (a)-(e) and their product forms" + fs, [&]() -> Verdict {
      const HfPartition part = h_f_partition(n, f);
      std::set<Perm> seen;
      std::size_t total = 0;
      for (int c = 0; c < 5; ++c) {
        for (const Perm& d : part.cls[static_cast<std::size_t>(c)].elements)
          if (!seen.insert(d).second) return {false, "classes overlap"};
        total += part.cls[static_cast<std::size_t>(c)].size();
        if (part.cls[static_cast<std::size_t>(c)].elements != part.product_form[static_cast<std::size_t>(c)].elements)
          return {false, std::string("class (") + "abcde"[c] + ") differs from its product form"};
      }
      if (total != hf.size() || std::vector<Perm>(seen.begin(), seen.end()) != hf.elements)
        return {false, "union is not H_f"};
      if (!part.lengths_add) return {false, "lengths do not add in a product form"};
      if (f == 1 && !part.cls[1].elements.empty()) return {false, "class (b) nonempty for f = 1"};
      return true;
    });

    rep.check(suite, "E^_f hat(D_(1^2f,n-2f)) = (1+qr^-1)^f E^_f hat(D_(2^f,n-2f))" + fs, [&]() -> bool {
      SymElement ef = eng.word(e_hat_word(f));
      SymElement a = eng.mul(ef, eng.hat_sum(coset_reps(detail::ones_then(f, n))));
      SymElement b = eng.mul(ef, eng.hat_sum(coset_reps(detail::twos_then(f, n))));
      return a == bmwkit::detail::one_plus_q_rinv().pow(f) * b;
    });
    rep.check(suite, "E^_f hat(D_(2^f,n-2f)) = a_f E^_f hat(H_f)" + fs, [&]() -> bool {
      SymElement ef = eng.word(e_hat_word(f));
      SymElement b = eng.mul(ef, eng.hat_sum(coset_reps(detail::twos_then(f, n))));
      return b == a_coeff(f) * eng.mul(ef, eng.hat_sum(hf));
    });

    const BlockGroup blocks = block_perm_group(f);
    rep.check(suite, "D_(2^f) = SS_f H_f(2f), unique factorization, lengths not additive for f >= 2" + fs,
              [&]() -> Verdict {
                const CosetSet d2 = coset_reps(Composition(static_cast<std::size_t>(f), 2));
                const CosetSet h = h_f(2 * f, f);
                const CosetSet prod = set_product(blocks.group, h);
                if (blocks.group.size() != [&] {
                      std::size_t x = 1;
                      for (int k = 2; k <= f; ++k) x *= static_cast<std::size_t>(k);
                      return x;
                    }())
                  return {false, "|SS_f| != f!"};
                if (prod.elements != d2.elements || prod.size() != blocks.group.size() * h.size())
                  return {false, "set"};
                if (f >= 2 && check_length_additive_factorization(d2, blocks.group, h))
                  return {false, "lengths unexpectedly additive"};
                return true;
              });

    if (f >= 2) {
      const CosetSet lower = embed(h_f(2 * f - 2, f - 1), n, 2);           // H_{f-1}^{3..2f}
      const CosetSet d12 = embed(coset_reps({1, 2 * f - 2}), n, 1);        // D_(1,2f-2)^{2..2f}
      rep.check(suite, "H_f(2f) = H_{f-1}^{3..2f} D_(1,2f-2)^{2..2f}, set and hat" + fs, [&]() -> Verdict {
        if (!check_length_additive_factorization(hf2f, lower, d12)) return {false, "set"};
        if (!(detail::hat_product(eng, {lower, d12}) == eng.hat_sum(hf2f))) return {false, "hat"};
        return true;
      });

      const CosetSet h2 = embed(h_f(4, 2), n, 0);                                     // H_2^{1..4}
      const CosetSet d3 = embed(coset_reps(2 * f > 4 ? Composition{3, 2 * f - 4} : Composition{3}), n, 1);
      const CosetSet d123 =
          embed(coset_reps(2 * f > 4 ? Composition{1, 2, 2 * f - 4} : Composition{1, 2}), n, 1);
      rep.check(suite, "H_2^{1..4} D_(3,2f-4)^{2..2f} = D_(1,2,2f-4)^{2..2f}, set and hat" + fs, [&]() -> Verdict {
        if (!check_length_additive_factorization(d123, h2, d3)) return {false, "set"};
        if (!(detail::hat_product(eng, {h2, d3}) == eng.hat_sum(d123))) return {false, "hat"};
        return true;
      });

      const CosetSet dd1 = embed(blocks.dd_1, n, 0);
      const CosetSet d22 = embed(coset_reps({2, 2 * f - 2}), n, 0);
      rep.check(suite, "DD_(1,f-1) H_f(2f) = H_{f-1}^{3..2f} D_(2,2f-2), set and hat" + fs, [&]() -> Verdict {
        const CosetSet lhs = set_product(dd1, hf2f);
        if (!check_length_additive_factorization(lhs, lower, d22)) return {false, "set"};
        if (!(eng.hat_sum(lhs) == detail::hat_product(eng, {lower, d22}))) return {false, "hat"};
        return true;
      });

      rep.check(suite, "ss_1 DD_(1,f-2)^{2..f} H_f(2f) = ss_1 H_2^{1..4} H_{f-2}^{5..2f} D_(3,2f-4)^{2..2f}" + fs,
                [&]() -> Verdict {
                  // ss_1 DD_(1,f-2)^{2..f} = { ss_1 ss_2 ... ss_k | k = 1..f-1 }
                  std::vector<Perm> lead;
                  Perm acc = block_generator(f, 1);
                  lead.push_back(acc);
                  for (int k = 2; k < f; ++k) {
                    acc = acc * block_generator(f, k);
                    lead.push_back(acc);
                  }
                  CosetSet lead_set = embed(bmwkit::detail::make_set("ss_1 DD", 2 * f, lead), n, 0);
                  const CosetSet lhs = set_product(lead_set, hf2f);
                  const CosetSet s1h2 = set_product(singleton(block_generator(f, 1).embedded(n, 0), "ss_1"), h2);
                  std::vector<CosetSet> right{s1h2};
                  if (f > 2) right.push_back(embed(h_f(2 * f - 4, f - 2), n, 4));
                  right.push_back(d3);
                  CosetSet rset = right.front();
                  for (std::size_t k = 1; k < right.size(); ++k) rset = set_product(rset, right[k]);
                  if (lhs.elements != rset.elements) return {false, "set"};
                  // (2f)! (f-1) / (2^f f!)
                  std::size_t num = static_cast<std::size_t>(f - 1), den = 1;
                  for (int k = 2; k <= 2 * f; ++k) num *= static_cast<std::size_t>(k);
                  for (int k = 1; k <= f; ++k) den *= static_cast<std::size_t>(2 * k);
                  if (lhs.size() != num / den) return {false, "cardinality"};
                  if (!(eng.hat_sum(lhs) == detail::hat_product(eng, right))) return {false, "hat"};
                  return true;
                });
    }
  }

  for (int f = 0; 2 * f <= n; ++f)
    rep.check(suite, "y_f E_1 recursion (f=" + std::to_string(f) + ")", [&]() { return verify_yfE1_recursion(eng, f); });
}

/// Properties of the symmetrizer and antisymmetrizer built from the closed
/// form.
inline void symmetrizer_suite(SymbolicEngine& eng, Report& rep) {
  const int n = eng.n();
  const std::string suite = "symmetrizer n=" + std::to_string(n);
  const SymElement x = symmetrizer(eng);
  const SymElement y = antisymmetrizer(eng);

  for (int f = 1; 2 * f <= n; ++f)
    rep.check(suite, "c_f/c_{f-1}: product and sum forms agree, flip matches (f=" + std::to_string(f) + ")", [&]() {
      return c_ratio(n, f) == c_ratio_sum_form(n, f) && c_ratio(n, f).flip_q() == flipped_ratio_closed_form(n, f);
    });
  rep.check(suite, "x_f has |H_f|^2 (n-2f)! terms", [&]() -> bool {
    for (int f = 0; 2 * f <= n; ++f) {
      std::size_t fact = 1;
      for (int k = 2; k <= n - 2 * f; ++k) fact *= static_cast<std::size_t>(k);
      const std::size_t h = h_f(n, f).size();
      if (x_f(eng, f).size() != h * h * fact) return false;
    }
    return true;
  });

  auto eigen_check = [&](const SymElement& e, const RatFunc& lam) -> Verdict {
    for (int i = 1; i < n; ++i) {
      if (!eng.right_mul_gen(e, {Gen::E, i}).is_zero()) return {false, "E_" + std::to_string(i)};
      if (!(eng.right_mul_gen(e, {Gen::T, i}) == lam * e)) return {false, "T_" + std::to_string(i)};
    }
    return true;
  };
  rep.check(suite, "x E_i = 0 and x T_i = q x, all i", [&]() { return eigen_check(x, RatFunc::q(1)); });
  rep.check(suite, "y E_i = 0 and y T_i = -q^-1 y, all i", [&]() { return eigen_check(y, -RatFunc::q(-1)); });
  rep.check(suite, "bar(x) = x, E_i x = 0 and T_i x = q x, all i", [&]() -> Verdict {
    if (!(eng.bar(x) == x)) return {false, "bar"};
    for (int i = 1; i < n; ++i) {
      if (!eng.mul(eng.word({{Gen::E, i}}), x).is_zero()) return {false, "E_" + std::to_string(i)};
      if (!(eng.mul(eng.word({{Gen::T, i}}), x) == RatFunc::q(1) * x)) return {false, "T_" + std::to_string(i)};
    }
    return true;
  });

  for (int f = 0; 2 * f <= n; ++f)
    rep.check(suite, "y_f = (1+qr^-1)^f a_f x_f (f=" + std::to_string(f) + ")", [&]() {
      return y_f(eng, f) == (bmwkit::detail::one_plus_q_rinv().pow(f) * a_coeff(f)) * x_f(eng, f);
    });

  rep.check(suite, "c_f solved from sum_f c_f x_f E_1 = 0 equals the closed form", [&]() -> Verdict {
    const SolvedRatios s = solve_c_ratios(eng);
    if (!s.expansion_ok) return {false, "x_f E_1 not in the expected span"};
    if (!s.independent) return {false, "script-E elements share monomials"};
    for (int f = 1; 2 * f <= n; ++f)
      if (!(s.ratio[static_cast<std::size_t>(f)] == c_ratio(n, f)))
        return {false, "f = " + std::to_string(f) + ": solved " + to_string(s.ratio[static_cast<std::size_t>(f)])};
    return true;
  });

  const bool square = n <= 5;
  rep.check(suite, std::string("x^2 = kappa x with kappa = sum_w q^{2 l(w)}") + (square ? " (by squaring)" : ""),
            [&]() -> Verdict {
              const RatFunc k = quasi_idempotent_scalar(eng, x, square);
              const RatFunc expect = detail::poincare_square_sum(n);
              if (!(k == expect)) return {false, "kappa = " + to_string(k)};
              if (!(eng.linear_character(x, Character::rho1) == expect)) return {false, "rho_1(x)"};
              return true;
            });
  rep.check(suite, "y^2 = kappa' y with kappa' = sum_w q^{-2 l(w)}", [&]() -> Verdict {
    const RatFunc expect = detail::poincare_square_sum(n).flip_q();
    const RatFunc k = eng.linear_character(y, Character::rho2);
    if (!(k == expect)) return {false, "rho_2(y) = " + to_string(k)};
    if (square) {
      const SymElement sq = eng.mul(y, y);
      if (!(sq == expect * y)) return {false, "square"};
    }
    return true;
  });
}

/// Result of the specialization r = -q^{2l+1}, n = l + 1.
struct SpecializationData {
  int l = 0;
  std::vector<RatFunc> ratios;  // index f = 1..n/2 (entry 0 unused)
  std::vector<int> exponent;    // k with flipped c_f = q^k after specialization
};

inline SpecializationData specialization_data(int l) {
  SpecializationData d;
  d.l = l;
  const int n = l + 1;
  d.ratios.assign(static_cast<std::size_t>(n / 2 + 1), RatFunc());
  d.exponent.assign(static_cast<std::size_t>(n / 2 + 1), 0);
  RatFunc acc(1);
  for (int f = 1; 2 * f <= n; ++f) {
    d.ratios[static_cast<std::size_t>(f)] = specialized_ratio(l, f);
    acc *= d.ratios[static_cast<std::size_t>(f)];
    if (!acc.is_laurent() || !acc.num().is_monomial()) throw std::logic_error("specialized c_f is not a monomial");
    d.exponent[static_cast<std::size_t>(f)] = acc.num().leading().e.q;
  }
  return d;
}

/// The ratios c_f/c_{f-1} with q -> -q^{-1}, r -> -q^{2l+1} are q^{2-4f},
/// and every antisymmetrizer coefficient is then q^k (-q)^{-l(u)-l(s)-l(d)}.
inline void specialization_suite(SymbolicEngine& eng, Report& rep) {
  const int n = eng.n();
  const int l = n - 1;
  const std::string suite = "specialization l=" + std::to_string(l);
  for (int f = 1; 2 * f <= n; ++f)
    rep.check(suite, "flipped ratio at r = -q^{2l+1} is q^{2-4f} (f=" + std::to_string(f) + ")", [&]() -> Verdict {
      const RatFunc r = specialized_ratio(l, f);
      if (!(r == RatFunc::q(2 - 4 * f))) return {false, to_string(r)};
      const RatFunc closed = flipped_ratio_closed_form(n, f).specialize_r(l);
      if (!(closed == r)) return {false, "closed form gives " + to_string(closed)};
      return true;
    });
  rep.check(suite, "antisymmetrizer coefficients are +-q^k (-q)^{-l(u)-l(s)-l(d)}", [&]() -> Verdict {
    const SymElement y = antisymmetrizer(eng);
    for (const auto& [k, c] : y.terms) {
      const Monomial& m = eng.basis()[static_cast<std::size_t>(k)];
      const int len = m.total_length();
      RatFunc pattern = RatFunc::q(-len);
      if (len % 2 != 0) pattern = -pattern;
      const RatFunc ratio = c.specialize_r(l) / pattern;
      if (!ratio.is_laurent() || !ratio.num().is_monomial()) return {false, m.to_string() + ": " + to_string(ratio)};
      const int expect = -2 * m.f * m.f;
      if (!(ratio == RatFunc::q(expect))) return {false, m.to_string() + ": " + to_string(ratio)};
    }
    return true;
  });
}

/// Numeric oracle at `points` seeded random points, both characters.
inline void oracle_suite(int n, Report& rep, std::uint64_t seed, int points = 3) {
  const std::string suite = "oracle n=" + std::to_string(n);
  const auto basis = Basis::make(n);
  PointSampler sampler(seed);
  for (int p = 0; p < points; ++p) {
    // draw until a point avoids every pole; both characters use that point
    mpq_class q0, r0;
    for (int t = 0;; ++t) {
      if (t == 100) throw std::runtime_error("no pole-free point found");
      std::tie(q0, r0) = sampler.next();
      try {
        PointField field(q0, r0);
        specialized_symmetrizer(*basis, field, Character::rho1);
        specialized_symmetrizer(*basis, field, Character::rho2);
        break;
      } catch (const PoleError&) {
      }
    }
    for (Character which : {Character::rho1, Character::rho2}) {
      const std::string name = std::string(which == Character::rho1 ? "symmetrizer" : "antisymmetrizer") +
                               " at (q,r) = (" + q0.get_str() + ", " + r0.get_str() + "): nullspace dim 1, proportional";
      rep.check(suite, name, [&]() -> Verdict {
        const OracleReport r = run_oracle(basis, q0, r0, which);
        if (r.dim != 1) return {false, "dim = " + std::to_string(r.dim)};
        if (!r.match) return {false, "not proportional"};
        return {true};
      });
    }
  }
}

}  // namespace bmwkit::verify
