#pragma once

// Normal-form monomials T_u T_sigma E^_f T_d and the enumeration of the
// basis of B_n they form.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "bmwkit/basis/brauer.hpp"
#include "bmwkit/symgroup/cosets.hpp"
#include "bmwkit/symgroup/perm.hpp"

namespace bmwkit {

/// T_u T_sigma E_1 E_3 ... E_{2f-1} T_d with u^{-1}, d in H_f and sigma
/// fixing 1..2f.
struct Monomial {
  int f = 0;
  Perm u;
  Perm sigma;
  Perm d;

  int n() const { return d.n(); }
  int total_length() const { return u.length() + sigma.length() + d.length(); }

  /// Checks the membership conditions of the normal form.
  bool valid() const {
    const int n = d.n();
    if (u.n() != n || sigma.n() != n || f < 0 || 2 * f > n) return false;
    if (!in_h_f(d, f) || !in_h_f(u.inverse(), f)) return false;
    for (int a = 1; a <= 2 * f; ++a)
      if (sigma(a) != a) return false;
    return true;
  }

  std::string to_string() const {
    return "f=" + std::to_string(f) + "|u=" + u.to_string() + "|s=" + sigma.to_string() + "|d=" + d.to_string();
  }

  static Monomial parse(std::string_view s) {
    auto fail = [&]() -> Monomial { throw std::invalid_argument("bad monomial: " + std::string(s)); };
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k)
      if (k == s.size() || s[k] == '|') {
        parts.push_back(s.substr(start, k - start));
        start = k + 1;
      }
    if (parts.size() != 4) return fail();
    auto value = [&](std::string_view p, std::string_view key) -> std::string_view {
      if (p.substr(0, key.size()) != key) fail();
      return p.substr(key.size());
    };
    Monomial m{std::stoi(std::string(value(parts[0], "f="))), Perm::parse(value(parts[1], "u=")),
               Perm::parse(value(parts[2], "s=")), Perm::parse(value(parts[3], "d="))};
    if (!m.valid()) return fail();
    return m;
  }

  /// Canonical order: f, then image sequences of u, sigma, d.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return std::tie(a.f, a.u, a.sigma, a.d) <=> std::tie(b.f, b.u, b.sigma, b.d);
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// reduced_word(u) . reduced_word(sigma) . E_1 E_3 ... E_{2f-1} . reduced_word(d)
inline GenWord canonical_word(const Monomial& m) {
  GenWord w;
  for (int i : m.u.reduced_word()) w.push_back({Gen::T, i});
  for (int i : m.sigma.reduced_word()) w.push_back({Gen::T, i});
  for (int j = 0; j < m.f; ++j) w.push_back({Gen::E, 2 * j + 1});
  for (int i : m.d.reduced_word()) w.push_back({Gen::T, i});
  return w;
}

/// Brauer diagram obtained by forgetting crossing orientations.
inline BrauerDiagram shadow(const Monomial& m) {
  auto [d, loops] = BrauerDiagram::of_word(m.n(), canonical_word(m));
  if (loops != 0) throw std::logic_error("normal-form word closed a loop");
  return d;
}

/// All normal-form monomials of B_n in canonical order.
inline std::vector<Monomial> enumerate_basis(int n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("enumerate_basis: n out of range");
  std::vector<Monomial> out;
  for (int f = 0; 2 * f <= n; ++f) {
    const CosetSet h = h_f(n, f);
    const CosetSet us = inverse_set(h);  // sorted
    std::vector<Perm> sigmas;
    for (const Perm& w : all_perms(n - 2 * f)) sigmas.push_back(w.embedded(n, 2 * f));
    for (const Perm& u : us.elements)
      for (const Perm& s : sigmas)
        for (const Perm& d : h.elements) out.push_back({f, u, s, d});
  }
  return out;
}

/// (2n-1)!!
inline std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

/// The enumerated basis together with lookup tables.
class Basis {
 public:
  explicit Basis(int n) : n_(n), mons_(enumerate_basis(n)) {
    words_.reserve(mons_.size());
    diagrams_.reserve(mons_.size());
    for (std::size_t k = 0; k < mons_.size(); ++k) {
      words_.push_back(canonical_word(mons_[k]));
      auto [d, loops] = BrauerDiagram::of_word(n, words_.back());
      if (loops != 0) throw std::logic_error("normal-form word closed a loop");
      if (!by_key_.emplace(d.key(), static_cast<int>(k)).second)
        throw std::logic_error("two monomials share a shadow: " + mons_[k].to_string());
      diagrams_.push_back(std::move(d));
      if (mons_[k].f == 0) by_perm_.emplace(mons_[k].sigma, static_cast<int>(k));
    }
  }

  static std::shared_ptr<const Basis> make(int n) { return std::make_shared<const Basis>(n); }

  int n() const { return n_; }
  std::size_t size() const { return mons_.size(); }
  const Monomial& operator[](std::size_t k) const { return mons_[k]; }
  const std::vector<Monomial>& monomials() const { return mons_; }
  const GenWord& word(std::size_t k) const { return words_[k]; }
  const BrauerDiagram& diagram(std::size_t k) const { return diagrams_[k]; }

  /// Index of the monomial whose shadow is d.
  int index_of(const BrauerDiagram& d) const { return index_of_key(d.key()); }
  int index_of_key(std::uint64_t key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) throw std::logic_error("diagram has no monomial");
    return it->second;
  }
  int index_of(const Monomial& m) const {
    if (m.n() != n_ || !m.valid()) throw std::invalid_argument("not a normal-form monomial of this basis: " + m.to_string());
    return index_of(shadow(m));
  }
  /// Index of T_w (the f = 0 monomial with sigma = w).
  int index_of_perm(const Perm& w) const { return by_perm_.at(w); }
  int identity_index() const { return index_of_perm(Perm(n_)); }

 private:
  int n_;
  std::vector<Monomial> mons_;
  std::vector<GenWord> words_;
  std::vector<BrauerDiagram> diagrams_;
  std::unordered_map<std::uint64_t, int> by_key_;
  std::unordered_map<Perm, int, PermHash> by_perm_;
};

}  // namespace bmwkit
