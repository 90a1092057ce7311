#include "hexdet/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hexdet {

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::mu() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::linear(const Rational& a0, const Rational& a1) {
    return Polynomial(std::vector<Rational>{a0, a1});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> quo;
    int dq = degree() - d.degree();
    if (dq < 0) return {Polynomial(), rem};
    quo.assign(static_cast<size_t>(dq) + 1, Rational(0));
    const Rational& lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rational c = rem.leading() / lead;
        quo[static_cast<size_t>(shift)] = c;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        Polynomial s(std::move(sub));
        rem = rem - s * c;
    }
    return {Polynomial(std::move(quo)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + Polynomial(coeffs_[i]);
    return acc;
}

std::string Polynomial::pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            out << to_string(a);
        } else {
            if (!unit) out << to_string(a) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string Polynomial::coeff_list() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out << ", ";
        out << to_string(coeffs_[i]);
    }
    out << "]";
    return out.str();
}

namespace {

// Integer image of a rational polynomial: coefficients scaled by the common
// denominator, then divided by their content; leading coefficient positive.
std::vector<Integer> primitive_z(const Polynomial& p) {
    std::vector<Integer> z;
    if (p.is_zero()) return z;
    Integer den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    z.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs())
        z.push_back(Integer(c.get_num()) * (den_lcm / c.get_den()));
    Integer content = 0;
    for (const Integer& zi : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.get_mpz_t());
    if (z.back() < 0) content = -content;
    for (Integer& zi : z) zi /= content;
    return z;
}

void make_primitive(std::vector<Integer>& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
    if (z.empty()) return;
    Integer content = 0;
    for (const Integer& zi : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.get_mpz_t());
    if (z.back() < 0) content = -content;
    for (Integer& zi : z) zi /= content;
}

// Pseudo-remainder of a by b over Z[x]: a power of lc(b) times a, reduced mod b.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer& lead = b.back();
    size_t db = b.size() - 1;
    while (a.size() > db) {
        Integer top = a.back();
        size_t shift = a.size() - 1 - db;
        for (Integer& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    std::vector<Integer> u = primitive_z(a);
    std::vector<Integer> v = primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    // Primitive PRS: pseudo-remainders reduced to primitive form each round.
    while (!v.empty()) {
        std::vector<Integer> r = pseudo_rem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(u.size());
    for (const Integer& zi : u) coeffs.emplace_back(zi);
    return Polynomial(std::move(coeffs));
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return (a * b).exact_div(gcd(a, b));
}

}  // namespace hexdet
