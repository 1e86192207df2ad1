#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "p/q", or a plain decimal like "-0.25" into an exact rational.
Rational parse_rational(const std::string& s);

// Canonical "p/q" form ("p" when the denominator is 1).
std::string rational_string(const Rational& q);

// Decimal rendering with the given number of significant digits.
std::string rational_decimal(const Rational& q, int significant_digits = 30);

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Exact q^e for integer e (q != 0 when e < 0).
Rational rational_pow(const Rational& q, long e);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dioph
