#pragma once

// Arithmetic modulo word-sized primes, sparse elimination, and rational
// reconstruction.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bmwkit::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}
inline u64 invmod(u64 a, u64 p) {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The k-th prime below 2^62 counting downwards (k = 0, 1, ...).
inline u64 nth_prime(int k) {
  static std::vector<u64> cache;
  u64 cand = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
  while (static_cast<int>(cache.size()) <= k) {
    while (!is_prime(cand)) cand -= 2;
    cache.push_back(cand);
    cand -= 2;
  }
  return cache[static_cast<std::size_t>(k)];
}

/// x mod p for a rational x; nullopt when p divides the denominator.
inline std::optional<u64> reduce(const mpq_class& x, u64 p) {
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_class num = x.get_num() % pp, den = x.get_den() % pp;
  if (num < 0) num += pp;
  if (den == 0) return std::nullopt;
  auto to_u64 = [](const mpz_class& z) {
    u64 out = 0;
    mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, z.get_mpz_t());
    return out;
  };
  return mulmod(to_u64(num), invmod(to_u64(den), p), p);
}

using SparseRow = std::vector<std::pair<int, u64>>;

/// Incremental row echelon form over F_p. Rows are inserted one at a time
/// and reduced against earlier pivot rows; a row that does not reduce to
/// zero becomes a new pivot row (pivot coefficient 1).
class Echelon {
 public:
  Echelon(int ncols, u64 p) : ncols_(ncols), p_(p), rank_of_col_(static_cast<std::size_t>(ncols), -1),
                              dense_(static_cast<std::size_t>(ncols), 0), touched_(static_cast<std::size_t>(ncols), 0) {}

  int rank() const { return static_cast<int>(pivots_.size()); }
  int nullity() const { return ncols_ - rank(); }
  u64 prime() const { return p_; }

  /// Returns true if the row was independent of the previous ones.
  bool insert(const SparseRow& row) {
    std::vector<int> support;
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    auto touch = [&](int c) {
      if (!touched_[c]) {
        touched_[c] = 1;
        support.push_back(c);
        if (rank_of_col_[c] >= 0) heap.push(rank_of_col_[c]);
      }
    };
    for (const auto& [c, v] : row) {
      touch(c);
      dense_[c] = addmod(dense_[c], v, p_);
    }
    while (!heap.empty()) {
      const int k = heap.top();
      heap.pop();
      const auto& piv = pivots_[static_cast<std::size_t>(k)];
      const u64 factor = dense_[piv.col];
      if (factor == 0) continue;
      for (const auto& [c, v] : piv.row) {
        touch(c);
        dense_[c] = submod(dense_[c], mulmod(factor, v, p_), p_);
      }
    }
    SparseRow rest;
    for (int c : support) {
      if (dense_[c] != 0) rest.emplace_back(c, dense_[c]);
      dense_[c] = 0;
      touched_[c] = 0;
    }
    if (rest.empty()) return false;
    // pivot on the entry with the largest column index
    std::sort(rest.begin(), rest.end());
    const int col = rest.back().first;
    const u64 inv = invmod(rest.back().second, p_);
    for (auto& [c, v] : rest) v = mulmod(v, inv, p_);
    rank_of_col_[col] = rank();
    pivots_.push_back({col, std::move(rest)});
    return true;
  }

  /// A nonzero vector of the nullspace, with the free column `free_col`
  /// set to 1 and all other free columns 0.
  std::vector<u64> null_vector(int free_col) const {
    if (rank_of_col_[free_col] >= 0) throw std::invalid_argument("column is a pivot column");
    std::vector<u64> x(static_cast<std::size_t>(ncols_), 0);
    x[free_col] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      u64 s = 0;
      for (const auto& [c, v] : it->row)
        if (c != it->col) s = addmod(s, mulmod(v, x[c], p_), p_);
      x[it->col] = submod(0, s, p_);
    }
    return x;
  }

  /// Columns that carry no pivot.
  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (rank_of_col_[c] < 0) out.push_back(c);
    return out;
  }

  std::size_t stored_entries() const {
    std::size_t s = 0;
    for (const auto& pv : pivots_) s += pv.row.size();
    return s;
  }

 private:
  struct Pivot {
    int col;
    SparseRow row;
  };
  int ncols_;
  u64 p_;
  std::vector<int> rank_of_col_;
  std::vector<Pivot> pivots_;
  std::vector<u64> dense_;
  std::vector<char> touched_;
};

/// Smallest-height rational congruent to a mod m, if one with
/// |num|, den <= sqrt(m/2) exists.
inline std::optional<mpq_class> rational_reconstruction(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class qt = r0 / r1;
    mpz_class r2 = r0 - qt * r1;
    mpz_class t2 = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return out;
}

}  // namespace bmwkit::modular
