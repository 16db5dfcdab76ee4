#pragma once

// Exact rationals (GMP) and their text form "p/q".

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmwkit {

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline mpq_class parse_rational(std::string_view s) {
  mpq_class x;
  std::string t(s);
  if (t.empty() || x.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
  x.canonicalize();
  return x;
}

inline std::string to_string(const mpq_class& x) { return x.get_str(); }

}  // namespace bmwkit
