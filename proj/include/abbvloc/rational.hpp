#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abbvloc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational power(const Rational& base, long exponent);

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational factorial(unsigned n);

}  // namespace abbvloc
