#pragma once

#include "hexdet/polynomial.hpp"

namespace hexdet {

// Reduced ratio of polynomials: nonzero monic denominator, coprime to the
// numerator. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction reciprocal() const;
    // Integer exponent, negative allowed for nonzero values.
    RationalFunction pow(long e) const;

    // Replace mu by a polynomial image.
    RationalFunction substitute(const Polynomial& image) const;
    // Evaluate at a point; throws std::domain_error on a pole.
    Rational eval(const Rational& x) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string pretty(const std::string& var = "μ") const;

private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace hexdet
