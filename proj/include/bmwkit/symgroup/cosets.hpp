#pragma once

// Explicit subsets of S_n used in the symmetrizer construction: Young
// subgroups, distinguished coset representatives D_mu, the transversals
// H_f, the block permutation group, and the shifted copies of all of these.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmwkit/symgroup/perm.hpp"

namespace bmwkit {

using Composition = std::vector<int>;

/// A labelled, sorted, duplicate-free list of permutations of one degree.
struct CosetSet {
  std::string label;
  int n = 0;
  std::vector<Perm> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& w) const { return std::binary_search(elements.begin(), elements.end(), w); }
};

namespace detail {

inline CosetSet make_set(std::string label, int n, std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw std::logic_error("duplicate elements in " + label);
  return {std::move(label), n, std::move(elems)};
}

inline std::string comp_string(const Composition& mu) {
  std::string s = "(";
  for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
  return s + ")";
}

inline int comp_total(const Composition& mu) {
  int n = 0;
  for (int p : mu) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
    n += p;
  }
  return n;
}

/// Simple reflections s_i lying in the Young subgroup S_mu.
inline std::vector<int> young_generators(const Composition& mu) {
  std::vector<int> gens;
  int start = 0;
  for (int p : mu) {
    for (int i = start + 1; i < start + p; ++i) gens.push_back(i);
    start += p;
  }
  return gens;
}

}  // namespace detail

/// The Young subgroup S_mu.
inline CosetSet young_subgroup(const Composition& mu) {
  const int n = detail::comp_total(mu);
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    int start = 0;
    for (int p : mu) {
      for (int a = start + 1; a <= start + p && ok; ++a) ok = w(a) > start && w(a) <= start + p;
      start += p;
    }
    if (ok) out.push_back(w);
  }
  return detail::make_set("S_" + detail::comp_string(mu), n, std::move(out));
}

/// Distinguished right coset representatives of S_mu in S_n: the w with
/// l(s w) > l(w) for every simple s in S_mu.
inline CosetSet coset_reps(const Composition& mu) {
  const int n = detail::comp_total(mu);
  const auto gens = detail::young_generators(mu);
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    // l(s_i w) > l(w)  <=>  (i)w < (i+1)w
    bool ok = std::all_of(gens.begin(), gens.end(), [&](int i) { return w(i) < w(i + 1); });
    if (ok) out.push_back(w);
  }
  return detail::make_set("D_" + detail::comp_string(mu), n, std::move(out));
}

/// The whole symmetric group as a coset set.
inline CosetSet symmetric_group(int n) { return detail::make_set("S_" + std::to_string(n), n, all_perms(n)); }

/// Membership in H_f(n).
inline bool in_h_f(const Perm& d, int f) {
  const int n = d.n();
  for (int i = 1; i < f; ++i)
    if (!(d(2 * i - 1) < d(2 * i + 1))) return false;
  for (int i = 1; i <= f; ++i)
    if (!(d(2 * i - 1) < d(2 * i))) return false;
  for (int j = 2 * f + 1; j < n; ++j)
    if (!(d(j) < d(j + 1))) return false;
  return true;
}

/// H_f(n): (1)d < (3)d < ... < (2f-1)d, (2i-1)d < (2i)d, and
/// (2f+1)d < ... < (n)d.
inline CosetSet h_f(int n, int f) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("h_f requires 0 <= 2f <= n");
  std::vector<Perm> out;
  for (const Perm& d : all_perms(n))
    if (in_h_f(d, f)) out.push_back(d);
  return detail::make_set("H_" + std::to_string(f) + "(" + std::to_string(n) + ")", n, std::move(out));
}

/// Image of a set in S_k under the embedding onto {offset+1..offset+k} of S_n.
inline CosetSet embed(const CosetSet& s, int n, int offset) {
  std::vector<Perm> out;
  out.reserve(s.size());
  for (const Perm& w : s.elements) out.push_back(w.embedded(n, offset));
  return detail::make_set(s.label + "^{" + std::to_string(offset + 1) + ".." + std::to_string(offset + s.n) + "}", n,
                          std::move(out));
}

/// The set {w^{-1}}.
inline CosetSet inverse_set(const CosetSet& s) {
  std::vector<Perm> out;
  out.reserve(s.size());
  for (const Perm& w : s.elements) out.push_back(w.inverse());
  return detail::make_set(s.label + "^-1", s.n, std::move(out));
}

/// Elementwise product Y*Z as a set (repeated products are merged; use
/// check_length_additive_factorization to test uniqueness).
inline CosetSet set_product(const CosetSet& y, const CosetSet& z) {
  if (y.n != z.n) throw std::invalid_argument("set_product: degree mismatch");
  std::set<Perm> out;
  for (const Perm& a : y.elements)
    for (const Perm& b : z.elements) out.insert(a * b);
  return {y.label + "*" + z.label, y.n, std::vector<Perm>(out.begin(), out.end())};
}

/// Singleton set {w}.
inline CosetSet singleton(const Perm& w, std::string label) { return {std::move(label), w.n(), {w}}; }

/// True iff every w in S is uniquely y*z with y in Y, z in Z, lengths add,
/// and |S| = |Y||Z|.
inline bool check_length_additive_factorization(const CosetSet& s, const CosetSet& y, const CosetSet& z) {
  if (s.n != y.n || s.n != z.n) return false;
  if (s.size() != y.size() * z.size()) return false;
  std::set<Perm> seen;
  for (const Perm& a : y.elements)
    for (const Perm& b : z.elements) {
      Perm w = a * b;
      if (w.length() != a.length() + b.length()) return false;
      if (!s.contains(w)) return false;
      if (!seen.insert(w).second) return false;
    }
  return seen.size() == s.size();
}

/// The five-class partition of H_f(n) by ((1)d^{-1}, (2)d^{-1}).
struct HfPartition {
  std::array<CosetSet, 5> cls;  // a, b, c, d, e
  /// Each class rebuilt as the corresponding product of smaller sets.
  std::array<CosetSet, 5> product_form;
  /// Whether lengths add in every product used for product_form.
  bool lengths_add = true;
};

namespace detail {

/// s_j s_{j-1} ... s_i (descending run) in S_n; identity if j < i.
inline Perm descending_run(int n, int j, int i) {
  Perm p(n);
  for (int k = j; k >= i; --k) p = p.times_simple(k);
  return p;
}

/// Product of a chain of sets, checking that each step is length additive
/// and injective.
inline CosetSet chain_product(const std::vector<CosetSet>& parts, bool& additive, std::string label) {
  const int n = parts.front().n;
  std::vector<Perm> acc = parts.front().elements;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::vector<Perm> next;
    std::set<Perm> seen;
    for (const Perm& a : acc)
      for (const Perm& b : parts[k].elements) {
        Perm w = a * b;
        if (w.length() != a.length() + b.length()) additive = false;
        if (!seen.insert(w).second) additive = false;
        next.push_back(w);
      }
    acc = std::move(next);
  }
  return make_set(std::move(label), n, std::move(acc));
}

inline CosetSet empty_set(int n, std::string label) { return {std::move(label), n, {}}; }

}  // namespace detail

inline HfPartition h_f_partition(int n, int f) {
  if (f < 1 || 2 * f > n) throw std::invalid_argument("h_f_partition requires 1 <= f <= n/2");
  const CosetSet h = h_f(n, f);
  HfPartition out;
  const std::array<std::pair<int, int>, 5> keys{{{1, 2}, {1, 3}, {1, 2 * f + 1}, {2 * f + 1, 1}, {2 * f + 1, 2 * f + 2}}};
  const char* names = "abcde";
  for (int c = 0; c < 5; ++c) {
    std::vector<Perm> v;
    for (const Perm& d : h.elements) {
      Perm di = d.inverse();
      // guard: keys beyond n can never match
      if (keys[c].first <= n && keys[c].second <= n && di(1) == keys[c].first && di(2) == keys[c].second)
        v.push_back(d);
    }
    // when 2f+1 = 3 (f = 1) the keys of (b) and (c) coincide; (b) is taken
    // to be empty for f = 1 so that the classes stay disjoint
    if (c == 1 && f == 1) v.clear();
    out.cls[c] = detail::make_set(h.label + "^(" + names[c] + ")", n, std::move(v));
  }

  bool& add = out.lengths_add;
  auto label = [&](int c) { return std::string("H_") + std::to_string(f) + "^(" + names[c] + ") product form"; };
  // (a) = H_{f-1}^{3..n}
  out.product_form[0] = embed(h_f(n - 2, f - 1), n, 2);
  out.product_form[0].label = label(0);
  // (b) = s_2 H_{f-2}^{5..n} D_{(1,1,n-4)}^{3..n}
  if (f >= 2) {
    out.product_form[1] = detail::chain_product(
        {singleton(Perm::simple(n, 2), "s_2"), embed(h_f(n - 4, f - 2), n, 4), embed(coset_reps({1, 1, n - 4}), n, 2)},
        add, label(1));
  } else {
    out.product_form[1] = detail::empty_set(n, label(1));
  }
  if (n >= 2 * f + 1) {
    // (c) = s_{2f} ... s_2 H_{f-1}^{4..n} D_{(1,n-3)}^{3..n}
    out.product_form[2] = detail::chain_product({singleton(detail::descending_run(n, 2 * f, 2), "s_2f..s_2"),
                                                 embed(h_f(n - 3, f - 1), n, 3), embed(coset_reps({1, n - 3}), n, 2)},
                                                add, label(2));
    // (d) = s_{2f} ... s_1 H_{f-1}^{4..n} D_{(1,n-3)}^{3..n}
    out.product_form[3] = detail::chain_product({singleton(detail::descending_run(n, 2 * f, 1), "s_2f..s_1"),
                                                 embed(h_f(n - 3, f - 1), n, 3), embed(coset_reps({1, n - 3}), n, 2)},
                                                add, label(3));
  } else {
    out.product_form[2] = detail::empty_set(n, label(2));
    out.product_form[3] = detail::empty_set(n, label(3));
  }
  if (n >= 2 * f + 2) {
    // (e) = s_{2f} ... s_1 s_{2f+1} ... s_2 H_f^{3..n}
    Perm lead = detail::descending_run(n, 2 * f, 1) * detail::descending_run(n, 2 * f + 1, 2);
    out.product_form[4] =
        detail::chain_product({singleton(lead, "s_2f..s_1 s_2f+1..s_2"), embed(h_f(n - 2, f), n, 2)}, add, label(4));
  } else {
    out.product_form[4] = detail::empty_set(n, label(4));
  }
  return out;
}

/// The block permutation group of S_{2f} generated by
/// ss_i = s_{2i} s_{2i-1} s_{2i+1} s_{2i}, together with the coset
/// representatives DD_{(1,f-1)} = { ss_1 ss_2 ... ss_k | k = 0..f-1 }.
struct BlockGroup {
  CosetSet group;
  CosetSet dd_1;
};

inline Perm block_generator(int f, int i) {
  const int n = 2 * f;
  return Perm::from_word(n, {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
}

inline BlockGroup block_perm_group(int f) {
  if (f < 1) throw std::invalid_argument("block_perm_group requires f >= 1");
  const int n = 2 * f;
  std::set<Perm> grp{Perm(n)};
  std::vector<Perm> frontier{Perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& w : frontier)
      for (int i = 1; i < f; ++i) {
        Perm x = w * block_generator(f, i);
        if (grp.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<Perm> dd;
  Perm acc(n);
  dd.push_back(acc);
  for (int k = 1; k < f; ++k) {
    acc = acc * block_generator(f, k);
    dd.push_back(acc);
  }
  return {{"SS_" + std::to_string(f), n, std::vector<Perm>(grp.begin(), grp.end())},
          detail::make_set("DD_(1," + std::to_string(f - 1) + ")", n, std::move(dd))};
}

}  // namespace bmwkit
