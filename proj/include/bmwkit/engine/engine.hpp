#pragma once

// Multiplication in B_n on the normal-form basis.
//
// The kernel is right multiplication of a basis monomial by one generator.
// Every basis monomial m has a representative word R(m): a word with the
// fewest crossings among loop-free words with the shadow of m, with the
// crossings oriented so that the drawn tangle is descending. R(m) has no
// loops and zero writhe, so it equals m in B_n. To multiply m by g we draw
// R(m) g; while the word is not descending we switch its first wrong
// crossing using
//     T_i = T_i^{-1} + (q - q^{-1}) (1 - E_i),
// evaluating the two correction words (one crossing fewer) recursively by
// folding the memoized kernel along them. A descending word with shadow D,
// l loops and writhe w equals delta^l r^{-w} times the monomial of D.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmwkit/basis/monomial.hpp"
#include "bmwkit/engine/element.hpp"
#include "bmwkit/engine/field.hpp"
#include "bmwkit/engine/tangle.hpp"
#include "bmwkit/symgroup/cosets.hpp"

namespace bmwkit {

enum class Character { rho1, rho2 };

template <class Field>
class Engine {
 public:
  using C = typename Field::value_type;
  using Elem = Element<C>;
  using Sparse = std::vector<std::pair<int, C>>;

  explicit Engine(int n, Field field = Field{}) : Engine(Basis::make(n), std::move(field)) {}
  Engine(std::shared_ptr<const Basis> basis, Field field = Field{})
      : basis_(std::move(basis)), field_(std::move(field)), n_(basis_->n()) {
    const std::size_t slots = basis_->size() * static_cast<std::size_t>(3 * std::max(0, n_ - 1));
    table_.resize(slots);
    state_.assign(slots, 0);
    build_representatives();
    build_fast_path();
  }

  int n() const { return n_; }
  const Basis& basis() const { return *basis_; }
  std::shared_ptr<const Basis> basis_ptr() const { return basis_; }
  const Field& field() const { return field_; }
  /// Representative word of a basis monomial (see file comment).
  const GenWord& representative(int m) const { return rep_[static_cast<std::size_t>(m)]; }
  /// Number of memoized kernel entries.
  std::size_t cache_size() const { return static_cast<std::size_t>(std::count(state_.begin(), state_.end(), 2)); }

  Elem zero() const { return Elem(n_); }
  Elem monomial(int idx, C c) const {
    Elem e(n_);
    e.add_term(idx, c);
    return e;
  }
  Elem monomial(int idx) const { return monomial(idx, field_.one()); }
  Elem monomial(const Monomial& m) const { return monomial(basis_->index_of(m)); }
  Elem identity() const { return monomial(basis_->identity_index()); }
  /// The product of the letters of w.
  Elem word(const GenWord& w) { return apply(identity(), w); }

  /// Basis expansion of (basis monomial m) * g.
  const Sparse& rmul(int m, Gen g) {
    if (g.i < 1 || g.i >= n_) throw std::out_of_range("generator index out of range: " + g.to_string());
    const std::size_t slot = static_cast<std::size_t>(m) * static_cast<std::size_t>(3 * (n_ - 1)) +
                             static_cast<std::size_t>(3 * (g.i - 1) + g.kind);
    if (state_[slot] == 2) return table_[slot];
    if (state_[slot] == 1) throw std::logic_error("straightening recursion did not terminate");
    state_[slot] = 1;
    Sparse result = compute(m, g);
    table_[slot] = std::move(result);
    state_[slot] = 2;
    return table_[slot];
  }

  Elem right_mul_gen(const Elem& e, Gen g) {
    check(e);
    std::map<int, C> acc;
    for (const auto& [k, c] : e.terms)
      for (const auto& [j, v] : rmul(k, g)) accumulate(acc, j, c * v);
    return finish(std::move(acc));
  }

  Elem apply(Elem e, const GenWord& w) {
    for (const Gen& g : w) e = right_mul_gen(e, g);
    return e;
  }

  /// a * b, folding the kernel along the canonical words of b's monomials;
  /// common prefixes of those words are multiplied only once.
  Elem mul(const Elem& a, const Elem& b) {
    check(a);
    check(b);
    struct Node {
      std::map<Gen, int> child;
      std::vector<const C*> ends;
    };
    std::vector<Node> trie(1);
    for (const auto& [k, c] : b.terms) {
      int cur = 0;
      for (const Gen& g : basis_->word(static_cast<std::size_t>(k))) {
        auto it = trie[cur].child.find(g);
        if (it == trie[cur].child.end()) {
          trie.push_back({});
          it = trie[cur].child.emplace(g, static_cast<int>(trie.size()) - 1).first;
        }
        cur = it->second;
      }
      trie[cur].ends.push_back(&c);
    }
    Elem out(n_);
    std::function<void(int, const Elem&)> dfs = [&](int node, const Elem& state) {
      for (const C* c : trie[node].ends) out.add_scaled(state, *c);
      for (const auto& [g, child] : trie[node].child) dfs(child, right_mul_gen(state, g));
    };
    dfs(0, a);
    return out;
  }

  /// The anti-automorphism fixing every T_i and E_i.
  Elem bar(const Elem& e) {
    check(e);
    Elem out(n_);
    for (const auto& [k, c] : e.terms) {
      GenWord w = basis_->word(static_cast<std::size_t>(k));
      std::reverse(w.begin(), w.end());
      out.add_scaled(word(w), c);
    }
    return out;
  }

  /// Sum over w in S of q^{l(w)} T_w.
  Elem hat_sum(const CosetSet& s) const {
    if (s.n != n_) throw std::invalid_argument("hat_sum: set of the wrong degree");
    Elem e(n_);
    for (const Perm& w : s.elements) e.add_term(basis_->index_of_perm(w), field_.q_pow(w.length()));
    return e;
  }

  /// rho1: T_i -> q, E_i -> 0;  rho2: T_i -> -q^{-1}, E_i -> 0.
  C linear_character(const Elem& e, Character which) const {
    check(e);
    C sum = field_.zero();
    for (const auto& [k, c] : e.terms) {
      const Monomial& m = (*basis_)[static_cast<std::size_t>(k)];
      if (m.f != 0) continue;
      const int l = m.sigma.length();
      C v = field_.q_pow(which == Character::rho1 ? l : -l);
      if (which == Character::rho2 && l % 2 != 0) v = -v;
      sum += c * v;
    }
    return sum;
  }

 private:
  std::shared_ptr<const Basis> basis_;
  Field field_;
  int n_;
  std::vector<GenWord> rep_;
  std::vector<Sparse> table_;
  std::vector<char> state_;  // 0 absent, 1 in progress, 2 done
  std::vector<int> fast_;    // m * T_i when it is again a basis monomial
  std::vector<C> delta_pow_;

  void check(const Elem& e) const {
    if (e.n != n_) throw std::invalid_argument("element of B_" + std::to_string(e.n) + " used in B_" + std::to_string(n_));
  }

  static void accumulate(std::map<int, C>& acc, int k, const C& v) {
    if (is_zero(v)) return;
    auto [it, fresh] = acc.try_emplace(k, v);
    if (!fresh) it->second += v;
  }

  Elem finish(std::map<int, C>&& acc) const {
    Elem e(n_);
    for (auto it = acc.begin(); it != acc.end();) {
      if (is_zero(it->second)) it = acc.erase(it);
      else ++it;
    }
    e.terms = std::move(acc);
    return e;
  }

  const C& delta_pow(int k) {
    while (static_cast<int>(delta_pow_.size()) <= k)
      delta_pow_.push_back(delta_pow_.empty() ? field_.one() : C(delta_pow_.back() * field_.delta()));
    return delta_pow_[static_cast<std::size_t>(k)];
  }

  /// Minimal-crossing loop-free words by 0-1 breadth-first search over
  /// shadows (E costs 0, a crossing costs 1), then oriented to descend.
  void build_representatives() {
    const Basis& b = *basis_;
    const std::size_t size = b.size();
    std::vector<int> dist(size, -1);
    std::vector<GenWord> best(size);
    const int start = b.identity_index();
    dist[start] = 0;
    std::deque<int> dq{start};
    while (!dq.empty()) {
      const int cur = dq.front();
      dq.pop_front();
      const BrauerDiagram& d = b.diagram(static_cast<std::size_t>(cur));
      for (int i = 1; i < n_; ++i) {
        for (Gen g : {Gen{Gen::E, i}, Gen{Gen::T, i}}) {
          auto [d2, loops] = d.compose(BrauerDiagram::generator(n_, g));
          if (loops) continue;
          const int nxt = b.index_of(d2);
          const int cost = g.kind == Gen::E ? 0 : 1;
          const int nd = dist[cur] + cost;
          if (dist[nxt] < 0 || nd < dist[nxt]) {
            dist[nxt] = nd;
            best[nxt] = best[cur];
            best[nxt].push_back(g);
            if (cost == 0) dq.push_front(nxt);
            else dq.push_back(nxt);
          }
        }
      }
    }
    rep_.resize(size);
    for (std::size_t k = 0; k < size; ++k) {
      if (dist[k] < 0) throw std::logic_error("shadow unreachable: " + b[k].to_string());
      GenWord w = best[k];
      for (;;) {
        TangleInfo info = analyze_word(n_, w);
        if (info.wrong < 0) {
          if (info.loops != 0 || info.writhe != 0 || b.index_of(info.shadow) != static_cast<int>(k))
            throw std::logic_error("representative word is not reduced: " + b[k].to_string());
          break;
        }
        Gen& g = w[static_cast<std::size_t>(info.wrong)];
        g.kind = g.kind == Gen::T ? Gen::Tinv : Gen::T;
      }
      rep_[k] = std::move(w);
    }
  }

  /// m * T_i = (f, u, sigma, d s_i) when l(d s_i) > l(d) and d s_i in H_f.
  void build_fast_path() {
    const Basis& b = *basis_;
    fast_.assign(b.size() * static_cast<std::size_t>(std::max(0, n_ - 1)), -1);
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Monomial& m = b[k];
      for (int i = 1; i < n_; ++i) {
        Perm d2 = m.d.times_simple(i);
        if (d2.length() != m.d.length() + 1 || !in_h_f(d2, m.f)) continue;
        fast_[k * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1)] =
            b.index_of(Monomial{m.f, m.u, m.sigma, d2});
      }
    }
  }

  /// Folds the kernel along w starting from e.
  Elem fold(Elem e, GenWord::const_iterator first, GenWord::const_iterator last) {
    for (; first != last; ++first) e = right_mul_gen(e, *first);
    return e;
  }

  Sparse compute(int m, Gen g) {
    std::map<int, C> acc;
    if (g.kind == Gen::Tinv) {
      // T_i^{-1} = T_i - z + z E_i
      const C& z = field_.z();
      for (const auto& [j, v] : rmul(m, {Gen::T, g.i})) accumulate(acc, j, v);
      accumulate(acc, m, -z);
      for (const auto& [j, v] : rmul(m, {Gen::E, g.i})) accumulate(acc, j, z * v);
      return to_sparse(std::move(acc));
    }
    if (g.kind == Gen::T) {
      const int f = fast_[static_cast<std::size_t>(m) * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(g.i - 1)];
      if (f >= 0) return Sparse{{f, field_.one()}};
    }
    GenWord w = rep_[static_cast<std::size_t>(m)];
    w.push_back(g);
    for (;;) {
      TangleInfo info = analyze_word(n_, w);
      if (info.wrong < 0) {
        accumulate(acc, basis_->index_of(info.shadow), C(delta_pow(info.loops) * field_.r_pow(-info.writhe)));
        break;
      }
      const auto k = static_cast<std::size_t>(info.wrong);
      const Gen x = w[k];
      // T = T^{-1} + z - z E   and   T^{-1} = T - z + z E
      C zc = field_.z();
      if (x.kind == Gen::Tinv) zc = -zc;
      Elem prefix = fold(identity(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      Elem dropped = fold(prefix, w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
      Elem smoothed =
          fold(right_mul_gen(prefix, {Gen::E, x.i}), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
      for (const auto& [j, v] : dropped.terms) accumulate(acc, j, zc * v);
      for (const auto& [j, v] : smoothed.terms) accumulate(acc, j, -(zc * v));
      w[k].kind = x.kind == Gen::T ? Gen::Tinv : Gen::T;
    }
    return to_sparse(std::move(acc));
  }

  static Sparse to_sparse(std::map<int, C>&& acc) {
    Sparse s;
    s.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (!is_zero(v)) s.emplace_back(k, std::move(v));
    return s;
  }
};

using SymbolicEngine = Engine<SymbolicField>;
using PointEngine = Engine<PointField>;

/// The automorphism q -> -q^{-1}, r -> r; it fixes every generator and so
/// acts on coefficients only.
inline Element<RatFunc> flip(const Element<RatFunc>& e) {
  Element<RatFunc> out(e.n);
  for (const auto& [k, c] : e.terms) out.add_term(k, c.flip_q());
  return out;
}

/// Coefficient-wise evaluation at a point.
inline Element<mpq_class> specialize(const Element<RatFunc>& e, const PointField& field) {
  Element<mpq_class> out(e.n);
  for (const auto& [k, c] : e.terms) out.add_term(k, field.from(c));
  return out;
}

}  // namespace bmwkit
