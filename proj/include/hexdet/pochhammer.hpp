#pragma once

#include "hexdet/rational_function.hpp"

namespace hexdet {

// Rising factorial (base)_k. For k < 0 this is 1/(base+k)_{-k}, which is a
// genuine rational function; a constant base that makes the reciprocal
// product vanish is rejected.
RationalFunction pochhammer(const Polynomial& base, long k);

// (top choose k) as a polynomial of degree k in the entries of top; the zero
// polynomial for k < 0.
Polynomial binomial_poly(const Polynomial& top, long k);

// a for k = 0, b for k > 0.
const RationalFunction& rho(long k, const RationalFunction& a, const RationalFunction& b);

RationalFunction substitute(const RationalFunction& f, const Polynomial& image);
Rational substitute(const RationalFunction& f, const Rational& x);

}  // namespace hexdet
