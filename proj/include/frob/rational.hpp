#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace frob {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and leading signs. Throws ParseError on anything else
/// or on a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace frob
