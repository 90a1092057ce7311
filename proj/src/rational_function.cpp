#include "hexdet/rational_function.hpp"

namespace hexdet {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("rational function: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("rational function: reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction result(1);
    RationalFunction base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

RationalFunction RationalFunction::substitute(const Polynomial& image) const {
    Polynomial n = num_.compose(image);
    Polynomial d = den_.compose(image);
    if (d.is_zero()) throw std::domain_error("substitute: image hits a pole");
    return RationalFunction(std::move(n), std::move(d));
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("eval: pole at " + to_string(x));
    return num_.eval(x) / d;
}

std::string RationalFunction::pretty(const std::string& var) const {
    if (is_polynomial()) return num_.pretty(var);
    std::string n = num_.pretty(var);
    std::string d = den_.pretty(var);
    if (num_.degree() > 0 || num_.coeffs().size() > 1) n = "(" + n + ")";
    return n + " / (" + d + ")";
}

}  // namespace hexdet
