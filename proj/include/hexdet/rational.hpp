#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hexdet {

using Integer = mpz_class;

// Canonical fraction p/q with q > 0 and gcd(|p|, q) = 1. mpq_class keeps the
// invariant through arithmetic as long as every value is constructed in
// canonical form, so all construction goes through the helpers below.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
Rational parse_rational(const std::string& text);

// "p" or "p/q".
std::string to_string(const Rational& q);

Integer factorial(unsigned long n);

// 2*4*...*n for even n, 1*3*...*n for odd n, 1 for n = 0.
Integer double_factorial(long n);

// Round toward minus infinity, e.g. floor_div(-1, 2) == -1.
long floor_div(long a, long b);

// Exact binomial coefficient for integer arguments; 0 for k < 0 or k > top
// when top >= 0. Negative top follows the polynomial extension.
Integer binomial_int(long top, long k);

}  // namespace hexdet
