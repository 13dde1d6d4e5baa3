#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jkres {

// GMP keeps mpq_class values canonical (reduced, positive denominator) after
// every arithmetic operation; values built from raw parts must be
// canonicalized explicitly, which make_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (q != 0). Surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Decimal expansion with exactly `digits` digits after the point, rounded
/// half away from zero.
std::string to_decimal(const Rational& q, int digits);

inline int sign(const Rational& q) { return sgn(q); }

Rational factorial(unsigned n);

}  // namespace jkres
