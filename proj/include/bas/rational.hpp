#ifndef BAS_RATIONAL_HPP
#define BAS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace bas {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Canonical "p" or "p/q" string, denominator always positive.
std::string to_string(const Rational& q);

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace bas

#endif
