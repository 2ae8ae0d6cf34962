#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subres {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal form: "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q" (q != 0) and canonicalizes. Throws ParseError.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational minus_one_pow(long exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace subres
