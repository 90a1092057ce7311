#include "hexdet/rational.hpp"

namespace hexdet {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (mpq_denref(q.get_mpq_t())->_mp_size == 0)
        throw std::domain_error("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer double_factorial(long n) {
    if (n < 0) throw std::domain_error("double_factorial: negative argument");
    Integer f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer binomial_int(long top, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= Integer(top - i);
    return num / factorial(static_cast<unsigned long>(k));
}

}  // namespace hexdet
