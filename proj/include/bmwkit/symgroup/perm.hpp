#pragma once

// Permutations of {1..n} acting on the right: (a)(s t) = ((a)s)t.

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmwkit {

class Perm {
 public:
  Perm() = default;
  /// Identity of S_n.
  explicit Perm(int n) : img_(static_cast<std::size_t>(n)) { std::iota(img_.begin(), img_.end(), 1); }
  /// From the image sequence ((1)w, ..., (n)w).
  static Perm from_images(std::vector<int> images) {
    Perm p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size() + 1, false);
    for (int x : p.img_) {
      if (x < 1 || x > static_cast<int>(p.img_.size()) || seen[x])
        throw std::invalid_argument("not a permutation: " + p.to_string());
      seen[x] = true;
    }
    return p;
  }
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Perm simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }
  /// s_{w_1} s_{w_2} ... s_{w_k}.
  static Perm from_word(int n, const std::vector<int>& word) {
    Perm p(n);
    for (int i : word) p = p.times_simple(i);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  /// (a)w
  int operator()(int a) const { return img_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  /// Product with right action: (a)(x*y) = ((a)x)y.
  friend Perm operator*(const Perm& x, const Perm& y) {
    if (x.n() != y.n()) throw std::invalid_argument("permutation degree mismatch");
    Perm p;
    p.img_.resize(x.img_.size());
    for (std::size_t k = 0; k < x.img_.size(); ++k) p.img_[k] = y(x.img_[k]);
    return p;
  }

  /// w * s_i; swaps the values i and i+1 in the image sequence.
  Perm times_simple(int i) const {
    Perm p = *this;
    for (auto& v : p.img_) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
    return p;
  }
  /// s_i * w; swaps positions i and i+1.
  Perm simple_times(int i) const {
    Perm p = *this;
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  Perm inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) p.img_[img_[k] - 1] = static_cast<int>(k) + 1;
    return p;
  }

  /// Inversion count.
  int length() const {
    int c = 0;
    for (std::size_t a = 0; a < img_.size(); ++a)
      for (std::size_t b = a + 1; b < img_.size(); ++b)
        if (img_[a] > img_[b]) ++c;
    return c;
  }

  /// Deterministic reduced word: repeatedly take the smallest i with
  /// (i)w > (i+1)w, record it and replace w by s_i w.
  std::vector<int> reduced_word() const {
    std::vector<int> out;
    std::vector<int> cur = img_;
    for (;;) {
      std::size_t i = 0;
      while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
      if (i + 1 >= cur.size()) break;
      std::swap(cur[i], cur[i + 1]);
      out.push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  /// Image under the embedding S_k -> S_n acting on {offset+1..offset+k}.
  Perm embedded(int n, int offset) const {
    if (offset < 0 || offset + this->n() > n) throw std::out_of_range("embedding does not fit");
    Perm p(n);
    for (int a = 1; a <= this->n(); ++a) p.img_[offset + a - 1] = (*this)(a) + offset;
    return p;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < img_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(img_[k]);
    }
    return s + "]";
  }

  static Perm parse(std::string_view s) {
    std::string t(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("bad permutation: " + t);
    std::vector<int> v;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("bad permutation: " + t);
      v.push_back(std::stoi(item));
    }
    return from_images(std::move(v));
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic order on image sequences.
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

/// All of S_n in lexicographic order of image sequences.
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.push_back(Perm::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 0;
    for (int x : p.images()) h = h * 8 + static_cast<std::size_t>(x);
    return h;
  }
};

}  // namespace bmwkit
