#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace powerpoly {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every arithmetic op.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and GMP arithmetic
// assumes reduced operands.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.05" or "-1.25e-1".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Nearest double when numerator and denominator are exactly representable; mpq_get_d truncates.
double to_double(const Rational& r);
std::string to_string(const RationalVector& v);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace powerpoly
