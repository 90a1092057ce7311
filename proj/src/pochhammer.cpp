#include "hexdet/pochhammer.hpp"

namespace hexdet {

namespace {

Polynomial rising_product(const Polynomial& base, long k) {
    Polynomial p(1);
    for (long i = 0; i < k; ++i) p = p * (base + Polynomial(Rational(i)));
    return p;
}

}  // namespace

RationalFunction pochhammer(const Polynomial& base, long k) {
    if (k == 0) return RationalFunction(1);
    if (k > 0) return RationalFunction(rising_product(base, k));
    Polynomial shifted = base + Polynomial(Rational(k));
    Polynomial p = rising_product(shifted, -k);
    if (p.is_zero())
        throw std::domain_error("pochhammer: negative index hits a zero factor");
    return RationalFunction(Polynomial(1), std::move(p));
}

Polynomial binomial_poly(const Polynomial& top, long k) {
    if (k < 0) return Polynomial();
    Polynomial p = rising_product(top - Polynomial(Rational(k - 1)), k);
    return p * (Rational(1) / Rational(factorial(static_cast<unsigned long>(k))));
}

const RationalFunction& rho(long k, const RationalFunction& a, const RationalFunction& b) {
    if (k < 0) throw std::domain_error("rho: negative index");
    return k == 0 ? a : b;
}

RationalFunction substitute(const RationalFunction& f, const Polynomial& image) {
    return f.substitute(image);
}

Rational substitute(const RationalFunction& f, const Rational& x) {
    return f.eval(x);
}

}  // namespace hexdet
