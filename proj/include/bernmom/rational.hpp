#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bernmom
{

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1/3,1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

// p/q in lowest terms (the two-argument mpq_class constructor does not
// canonicalize).
inline Rational frac(const Integer &p, const Integer &q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational frac(long p, long q)
{
    return frac(Integer(p), Integer(q));
}

Rational pow(const Rational &base, long exponent);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);

inline bool is_zero(const Rational &q)
{
    return sgn(q) == 0;
}

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

// Natural log of |q| computed from the GMP mantissa/exponent split, so it
// stays finite for values far outside double range. q must be nonzero.
double log_abs(const Rational &q);

// Nearest double, with the same range safety as log_abs (returns +-inf or 0
// only when the true value is outside double range).
double to_double(const Rational &q);

} // namespace bernmom
