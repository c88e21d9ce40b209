// Exact rational arithmetic over GMP. All values are kept in canonical
// form: lowest terms, positive denominator, zero as 0/1.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace surml {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational from numerator and denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "123", "-0.65", "1.5e-3" or "p/q" into an exact rational.
// Decimal strings are converted without rounding (e.g. "-0.65" -> -13/20).
Rational rational_from_string(std::string_view s);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

// True when gcd(|num|, den) == 1 and den > 0.
bool is_canonical(const Rational& q);

}  // namespace surml
