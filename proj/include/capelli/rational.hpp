#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace capelli {

/// Exact arbitrary-precision rational. Always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "3", "-3/4". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace capelli
