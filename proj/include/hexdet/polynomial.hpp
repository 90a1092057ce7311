#pragma once

#include "hexdet/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hexdet {

// Dense univariate polynomial in mu over Q, coefficients stored in ascending
// degree. The zero polynomial is the empty coefficient vector; otherwise the
// last coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial mu();
    // a0 + a1*mu
    static Polynomial linear(const Rational& a0, const Rational& a1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_value() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned long e) const;

    // Long division by a nonzero divisor: (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    // Division that must leave no remainder.
    Polynomial exact_div(const Polynomial& d) const;

    Rational eval(const Rational& x) const;
    Polynomial compose(const Polynomial& inner) const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string pretty(const std::string& var = "μ") const;
    // "[a0, a1, ...]" with rationals as p/q; "[]" for zero.
    std::string coeff_list() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Greatest common divisor, returned with integer coefficients, primitive and
// with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace hexdet
