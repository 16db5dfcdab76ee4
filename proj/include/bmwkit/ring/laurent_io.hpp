#pragma once

// Canonical text form of Laurent polynomials: terms in descending
// (q-exponent, r-exponent) order, e.g. "q^2*r - 3*q + r^-1".

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bmwkit/ring/laurent.hpp"

namespace bmwkit {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string monomial_string(const Exponent& e) {
  auto var = [](char v, int k) -> std::string {
    if (k == 0) return {};
    if (k == 1) return std::string(1, v);
    return std::string(1, v) + "^" + std::to_string(k);
  };
  std::string qs = var('q', e.q), rs = var('r', e.r);
  if (!qs.empty() && !rs.empty()) return qs + "*" + rs;
  return qs + rs;
}

}  // namespace detail

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.c < 0;
    mpz_class mag = neg ? mpz_class(-t.c) : t.c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = detail::monomial_string(t.e);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace detail {

/// Recursive-descent reader for the canonical polynomial syntax.
class PolyReader {
 public:
  explicit PolyReader(std::string_view s) : s_(s) {}

  LaurentPoly poly() {
    std::vector<Term> ts;
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    ts.push_back(term(neg));
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      ts.push_back(term(c == '-'));
    }
    return LaurentPoly::from_terms(std::move(ts));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int exponent() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    long v = std::stol(d);
    return static_cast<int>(neg ? -v : v);
  }

  Term term(bool neg) {
    Term t{{0, 0}, 1};
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.c *= mpz_class(digits());
      } else if (c == 'q' || c == 'r') {
        ++pos_;
        int k = 1;
        if (accept('^')) k = exponent();
        (c == 'q' ? t.e.q : t.e.r) += k;
      } else {
        fail("expected a factor");
      }
      any = true;
      if (!accept('*')) break;
    }
    if (!any) fail("empty term");
    if (neg) t.c = -t.c;
    return t;
  }
};

}  // namespace detail

inline LaurentPoly parse_laurent(std::string_view s) {
  detail::PolyReader rd(s);
  LaurentPoly p = rd.poly();
  if (!rd.done()) rd.fail("trailing input");
  return p;
}

}  // namespace bmwkit
