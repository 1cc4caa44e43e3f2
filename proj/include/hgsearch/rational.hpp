#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hgsearch {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign on p). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// num/den in lowest terms.
inline Rational fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True when q is an integer <= 0.
inline bool is_nonpositive_integer(const Rational& q) {
  return is_integer(q) && sgn(q) <= 0;
}

Rational rational_pow(const Rational& base, long exponent);

/// Integer square root when q is a perfect square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace hgsearch
