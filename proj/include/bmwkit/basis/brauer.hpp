#pragma once

// Brauer diagrams as perfect matchings of n top and n bottom points, and
// the generator words whose shadows they are.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmwkit/symgroup/perm.hpp"

namespace bmwkit {

/// Largest n for which diagrams pack into a 64-bit key.
inline constexpr int kMaxN = 8;

/// One letter of a word in the generators T_i, T_i^{-1}, E_i.
struct Gen {
  enum Kind : std::uint8_t { T = 0, Tinv = 1, E = 2 };
  Kind kind = T;
  int i = 1;

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;

  std::string to_string() const {
    static const char* names[] = {"T", "Ti", "E"};
    return std::string(names[kind]) + "(" + std::to_string(i) + ")";
  }
};

using GenWord = std::vector<Gen>;

inline void check_word(const GenWord& w, int n) {
  for (const Gen& g : w)
    if (g.i < 1 || g.i >= n) throw std::out_of_range("generator index out of range: " + g.to_string());
}

/// Perfect matching on {top 1..n} u {bottom 1..n}. Point p on top has index
/// p-1, point p on the bottom has index n+p-1.
class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  static BrauerDiagram identity(int n) {
    BrauerDiagram d(n);
    for (int p = 0; p < n; ++p) d.link(p, n + p);
    return d;
  }
  /// Shadow of a single generator; T_i and T_i^{-1} both give s_i.
  static BrauerDiagram generator(int n, Gen g) {
    BrauerDiagram d(n);
    for (int p = 0; p < n; ++p) {
      if (p == g.i - 1 || p == g.i) continue;
      d.link(p, n + p);
    }
    const int a = g.i - 1, b = g.i;
    if (g.kind == Gen::E) {
      d.link(a, b);
      d.link(n + a, n + b);
    } else {
      d.link(a, n + b);
      d.link(b, n + a);
    }
    return d;
  }
  /// Diagram of a permutation: top a joined to bottom (a)w.
  static BrauerDiagram from_perm(const Perm& w) {
    const int n = w.n();
    BrauerDiagram d(n);
    for (int a = 1; a <= n; ++a) d.link(a - 1, n + w(a) - 1);
    return d;
  }
  static BrauerDiagram from_partner(std::vector<int> partner) {
    BrauerDiagram d;
    d.n_ = static_cast<int>(partner.size()) / 2;
    d.partner_ = std::move(partner);
    d.validate();
    return d;
  }

  int n() const { return n_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& partners() const { return partner_; }
  static bool is_top(int point, int n) { return point < n; }

  /// Number of top-top edges (equal to the number of bottom-bottom edges).
  int horizontal_edges() const {
    int c = 0;
    for (int p = 0; p < n_; ++p)
      if (partner_[p] < n_ && partner_[p] > p) ++c;
    return c;
  }

  /// Stacks this diagram on top of `below`; returns the product and the
  /// number of closed loops formed in the middle.
  std::pair<BrauerDiagram, int> compose(const BrauerDiagram& below) const {
    if (below.n_ != n_) throw std::invalid_argument("diagram degree mismatch");
    const int n = n_;
    // points: 0..2n-1 of this (upper), 2n..4n-1 of below
    auto next_across = [&](int pt) -> int {
      // pt is a middle point of the upper diagram (its bottom) or of the lower one (its top)
      if (pt < 2 * n) return 2 * n + (pt - n);  // upper bottom p  -> lower top p
      return n + (pt - 2 * n);                  // lower top p -> upper bottom p
    };
    auto partner_of = [&](int pt) -> int {
      if (pt < 2 * n) return partner_[pt];
      return 2 * n + below.partner_[pt - 2 * n];
    };
    auto is_outer = [&](int pt) { return pt < n || pt >= 3 * n; };
    auto to_result = [&](int pt) { return pt < n ? pt : pt - 2 * n; };

    BrauerDiagram out(n);
    std::vector<char> used(static_cast<std::size_t>(4 * n), 0);
    for (int start : {0, 3 * n}) {
      for (int k = 0; k < n; ++k) {
        int s = start + k;
        if (used[s]) continue;
        int cur = partner_of(s);
        used[s] = 1;
        while (!is_outer(cur)) {
          used[cur] = 1;
          int across = next_across(cur);
          used[across] = 1;
          cur = partner_of(across);
        }
        used[cur] = 1;
        out.link(to_result(s), to_result(cur));
      }
    }
    int loops = 0;
    for (int p = n; p < 2 * n; ++p) {
      if (used[p]) continue;
      ++loops;
      int cur = p;
      do {
        used[cur] = 1;
        int other = partner_of(cur);
        used[other] = 1;
        cur = next_across(other);
      } while (cur != p);
    }
    return {out, loops};
  }

  /// Shadow of a word (product of generator diagrams, top to bottom).
  static std::pair<BrauerDiagram, int> of_word(int n, const GenWord& w) {
    BrauerDiagram d = identity(n);
    int loops = 0;
    for (const Gen& g : w) {
      auto [next, l] = d.compose(generator(n, g));
      d = std::move(next);
      loops += l;
    }
    return {d, loops};
  }

  /// Packed 64-bit key (4 bits per point).
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t p = 0; p < partner_.size(); ++p) k |= static_cast<std::uint64_t>(partner_[p]) << (4 * p);
    return k;
  }

  /// Sorted edge list, bottom points negative, e.g. [[1,2],[-1,-2]].
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    auto label = [&](int pt) { return pt < n_ ? pt + 1 : -(pt - n_ + 1); };
    for (int pt = 0; pt < 2 * n_; ++pt) {
      int other = partner_[pt];
      if (other < pt) continue;
      out.emplace_back(label(pt), label(other));
    }
    return out;
  }

  std::string to_json() const {
    std::string s = "[";
    bool first = true;
    for (auto [a, b] : edges()) {
      if (!first) s += ",";
      first = false;
      s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    return s + "]";
  }

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<int> partner_;

  explicit BrauerDiagram(int n) : n_(n), partner_(static_cast<std::size_t>(2 * n), -1) {
    if (n < 0 || n > kMaxN) throw std::out_of_range("diagram degree out of range");
  }
  void link(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
  }
  void validate() const {
    for (std::size_t p = 0; p < partner_.size(); ++p) {
      int o = partner_[p];
      if (o < 0 || o >= static_cast<int>(partner_.size()) || o == static_cast<int>(p) || partner_[o] != static_cast<int>(p))
        throw std::invalid_argument("not a perfect matching");
    }
  }
};

}  // namespace bmwkit
