#include "hexdet/closed_forms.hpp"

namespace hexdet {

namespace {

// (mu + c)_k
RationalFunction LP(long c, long k) {
    return pochhammer(Polynomial::linear(Rational(c), 1), k);
}

// (mu/2 + c)_k
RationalFunction HP(const Rational& c, long k) {
    return pochhammer(Polynomial::linear(c, make_rational(1, 2)), k);
}

// (c)_k for a constant base
RationalFunction NP(const Rational& c, long k) {
    return pochhammer(Polynomial(c), k);
}

RationalFunction NP(long c, long k) { return NP(Rational(c), k); }

RationalFunction two_pow(long e) {
    return RationalFunction(Rational(2)).pow(e);
}

Rational fact_q(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

}  // namespace

// ---- Quotient formulas ------------------------------------------------------

RationalFunction kt_ratio(long n) {
    require(n >= 1, "kt: n >= 1");
    return LP(2 * n, n) * HP(make_rational(4 * n + 1, 2), n - 1) /
           (NP(n, n) * HP(make_rational(2 * n + 1, 2), n - 1));
}

RationalFunction kt_ratio_sign_form(long n) {
    require(n >= 1, "kt: n >= 1");
    long sign_exp = (n - 1) * (n - 2) / 2;
    RationalFunction sign((sign_exp % 2 == 0) ? 1 : -1);
    Polynomial neg_base = Polynomial::linear(make_rational(3 - 4 * n, 2), make_rational(-1, 2));
    return sign * two_pow(n) * HP(make_rational(4 * n + 1, 2), n - 1) * HP(Rational(n), floor_div(n + 1, 2)) /
           (NP(n, n) * pochhammer(neg_base, floor_div(n - 1, 2)));
}

RationalFunction kt_ratio_floor_form(long n) {
    require(n >= 1, "kt: n >= 1");
    return two_pow(n) * HP(make_rational(4 * n + 1, 2), n - 1) * HP(Rational(n), floor_div(n + 1, 2)) /
           (NP(n, n) * HP(make_rational(2 * floor_div(3 * n, 2) + 1, 2), floor_div(n - 1, 2)));
}

RationalFunction r00_even(long n) {
    require(n >= 1, "r00-even: n >= 1");
    return LP(2 * n, n) * HP(make_rational(4 * n + 1, 2), n - 1) /
           (NP(n, n) * HP(make_rational(2 * n + 1, 2), n - 1));
}

RationalFunction r00_odd(long n) {
    require(n >= 1, "r00-odd: n >= 1");
    return LP(2 * n - 2, n - 1) * HP(make_rational(4 * n - 1, 2), n) /
           (NP(n, n) * HP(make_rational(2 * n - 1, 2), n - 1));
}

RationalFunction r00(long i) {
    require(i >= 0, "r00: argument >= 0");
    if (i == 0) return RationalFunction(1);
    return (i % 2 == 0) ? r00_even(i / 2) : r00_odd((i + 1) / 2);
}

RationalFunction r10(long n) {
    require(n >= 1, "r10: n >= 1");
    return -(LP(2 * n, n) * LP(2 * n + 1, n - 1) * HP(make_rational(4 * n + 1, 2), n - 1).pow(2)) /
           (NP(n, n) * NP(n, n - 1) * HP(make_rational(2 * n + 1, 2), n - 1).pow(2));
}

RationalFunction r01(long n) {
    require(n >= 1, "r01: n >= 1");
    return -(LP(2 * n - 2, n + 2) * LP(2 * n + 1, n - 1) * HP(make_rational(4 * n + 1, 2), n - 1).pow(2)) /
           (NP(n, n + 2) * NP(n, n - 1) * HP(make_rational(2 * n + 1, 2), n - 1).pow(2));
}

RationalFunction r20(long n) {
    require(n >= 1, "r20: n >= 1");
    return LP(2 * n + 1, n - 1) * HP(make_rational(4 * n + 1, 2), n - 1) /
           (NP(n, n - 1) * HP(make_rational(2 * n + 1, 2), n - 1));
}

RationalFunction r02(long n) {
    require(n >= 1, "r02: n >= 1");
    return RationalFunction(Rational(2 * n - 1)) * LP(2 * n - 2, n + 2) *
           HP(make_rational(4 * n + 1, 2), n - 1) /
           (RationalFunction(Polynomial::linear(Rational(2 * n), 1)) * NP(n, n + 2) *
            HP(make_rational(2 * n + 1, 2), n - 1));
}

RationalFunction dm11(long n) {
    require(n >= 1, "dm11: n >= 1");
    return RationalFunction(Rational(2 * n - 1)) * LP(2 * n - 2, n + 2) *
           HP(make_rational(4 * n + 1, 2), n - 1) /
           (RationalFunction(Polynomial::linear(Rational(2 * n), 1)) * NP(n, n + 2) *
            HP(make_rational(2 * n + 1, 2), n - 1));
}

RationalFunction fam_a_even(long r, long n) {
    require(r >= 0, "fam-a-even: r >= 0");
    require(n >= r + 1, "fam-a-even: n >= r+1");
    return LP(2 * n + 4 * r, n - r) * HP(make_rational(2 * (2 * n + r) + 1, 2), n - r - 1) /
           (NP(n - r, n - r) * HP(make_rational(2 * (n + 2 * r) + 1, 2), n - r - 1));
}

RationalFunction fam_a_odd(long r, long n) {
    require(r >= 0, "fam-a-odd: r >= 0");
    require(n >= r + 1, "fam-a-odd: n >= r+1");
    return LP(2 * n + 4 * r - 2, n - r - 1) * HP(make_rational(2 * (2 * n + r) - 1, 2), n - r) /
           (NP(n - r, n - r) * HP(make_rational(2 * (n + 2 * r) - 1, 2), n - r - 1));
}

RationalFunction fam_a_ratio(long r, long i) {
    require(r >= 0, "fam-a: r >= 0");
    require(i >= 2 * r + 1, "fam-a: quotient index > 2r");
    return (i % 2 == 0) ? fam_a_even(r, i / 2) : fam_a_odd(r, (i + 1) / 2);
}

RationalFunction fam_b_ratio(long r, long n) {
    require(r >= 1, "fam-b: r >= 1");
    require(n >= r, "fam-b: n >= r");
    return -(LP(2 * n + 4 * r - 4, n - r + 1) * LP(2 * n + 4 * r - 3, n - r) *
             HP(make_rational(2 * (2 * n + r) - 1, 2), n - r).pow(2)) /
           (NP(n - r + 1, n - r + 1) * NP(n - r + 1, n - r) *
            HP(make_rational(2 * (n + 2 * r) - 3, 2), n - r).pow(2));
}

RationalFunction fam_c_ratio(long r, long n) {
    require(r >= 1, "fam-c: r >= 1");
    require(n >= r, "fam-c: n >= r");
    RationalFunction num = RationalFunction(Rational(2 * n + 2 * r)) *
                           RationalFunction(Polynomial::linear(Rational(2 * n + 2 * r - 1), 1)) *
                           RationalFunction(Polynomial::linear(Rational(2 * n + 2 * r), 1)) *
                           LP(2 * n + 4 * r, n - r).pow(2) *
                           HP(make_rational(2 * (2 * n + r) + 3, 2), n - r + 1).pow(2);
    RationalFunction den = RationalFunction(Rational((2 * n + 1) * (2 * n + 2))) *
                           RationalFunction(Polynomial::linear(Rational(2 * n + 1), 1)) *
                           NP(n - r + 1, n - r + 1).pow(2) *
                           HP(make_rational(2 * (n + 2 * r) + 1, 2), n - r).pow(2);
    return -num / den;
}

RationalFunction fam_d_ratio(long r, long n) {
    require(r >= 0, "fam-d: r >= 0");
    require(n >= 0, "fam-d: n >= 0");
    if (n > r) {
        RationalFunction num = LP(2 * n - 1, 2 * r) * LP(2 * n - 3, 2 * r + 1) *
                               LP(2 * n + 4 * r, n - r).pow(2) *
                               HP(make_rational(2 * (2 * n + r) + 1, 2), n - r - 1).pow(2);
        RationalFunction den = NP(2 * n + 1, 2 * r) * NP(2 * n + 2, 2 * r + 1) *
                               NP(n - r, n - r).pow(2) *
                               HP(make_rational(2 * (n + 2 * r) + 1, 2), n - r - 1).pow(2);
        return -num / den;
    }
    if (n == r) {
        RationalFunction num = RationalFunction(Polynomial::linear(Rational(3), Rational(-1))) *
                               LP(2 * r - 2, 2 * r) * LP(2 * r - 1, 2 * r);
        return num / (NP(2 * r + 1, 2 * r) * NP(2 * r + 1, 2 * r + 1));
    }
    return LP(2 * n - 2, 2 * r) * LP(2 * n - 1, 2 * r) /
           (NP(2 * n + 1, 2 * r) * NP(2 * n + 2, 2 * r));
}

RationalFunction fam_e_left(long r, long n) {
    require(r >= 1 && n >= r, "fam-e: n >= r >= 1");
    return LP(2 * n + 4 * r - 4, n - r + 1) * HP(make_rational(2 * (2 * n + r) - 1, 2), n - r) /
           (NP(n - r + 1, n - r + 1) * HP(make_rational(2 * (n + 2 * r) - 3, 2), n - r));
}

RationalFunction fam_e_right(long r, long n) {
    require(r >= 1 && n >= r, "fam-e: n >= r >= 1");
    return LP(2 * n - 1, 2 * r - 2) * LP(2 * n + 4 * r - 4, n - r + 1) *
           HP(make_rational(2 * (2 * n + r) - 1, 2), n - r) /
           (NP(2 * n + 1, 2 * r - 2) * NP(n - r + 1, n - r + 1) *
            HP(make_rational(2 * (n + 2 * r) - 3, 2), n - r));
}

RationalFunction fam_f_ratio(long r, long n) {
    require(r >= 1 && n >= r, "fam-f: n >= r >= 1");
    return RationalFunction(Rational(2)) * LP(2 * n - 2, 2 * r) * LP(2 * n + 4 * r - 2, n - r - 1) *
           HP(make_rational(2 * (2 * n + r) - 1, 2), n - r) /
           (NP(2 * n, 2 * r) * NP(n - r + 1, n - r) *
            HP(make_rational(2 * (n + 2 * r) - 1, 2), n - r - 1));
}

// ---- Determinant formulas ---------------------------------------------------

RationalFunction bindet(long s, long t, long n) {
    require(t >= 0, "bindet: t >= 0");
    require(n >= 1, "bindet: n >= 1");
    RationalFunction g(1);
    for (long i = 0; i < t; ++i) g *= LP(s + i - 1, n) / NP(i + 1, n);
    return g;
}

RationalFunction prop_d00(long n) {
    require(n >= 1, "prop-d00: n >= 1");
    RationalFunction d(2);
    for (long i = 1; i <= n - 1; ++i) d *= r00(i);
    return d;
}

RationalFunction prop_d10(long n) {
    require(n >= 1, "prop-d10: n >= 1");
    if (n % 2 == 0) return RationalFunction(0);
    RationalFunction d(1);
    for (long i = 1; i <= (n - 1) / 2; ++i) d *= r10(i);
    return d;
}

RationalFunction prop_d01(long n) {
    require(n >= 1, "prop-d01: n >= 1");
    if (n % 2 == 0) return RationalFunction(0);
    RationalFunction d(Polynomial::linear(-1, 1));
    for (long i = 1; i <= (n - 1) / 2; ++i) d *= r01(i);
    return d;
}

RationalFunction fam_a_det(long r, long n) {
    require(r >= 0, "fam-a-det: r >= 0");
    require(n >= 1, "fam-a-det: n >= 1");
    if (n <= 2 * r) return RationalFunction(1);
    RationalFunction d(2);
    for (long i = 2 * r + 1; i <= n - 1; ++i) d *= fam_a_ratio(r, i);
    return d;
}

RationalFunction fam_b_det(long r, long n) {
    require(r >= 1, "fam-b-det: r >= 1");
    require(n >= 1, "fam-b-det: n >= 1");
    if (n % 2 == 0) return (n >= 2 * r) ? RationalFunction(0) : RationalFunction(1);
    RationalFunction d(1);
    for (long i = r; i <= (n - 1) / 2; ++i) d *= fam_b_ratio(r, i);
    return d;
}

RationalFunction fam_c_det(long r, long n) {
    require(r >= 1, "fam-c-det: r >= 1");
    require(n >= r, "fam-c-det: n >= r");
    RationalFunction d = RationalFunction(Polynomial::linear(-1, 1)) * LP(2 * r, 2 * r - 1) /
                         RationalFunction(fact_q(2 * r));
    for (long i = r; i <= n - 1; ++i) d *= fam_c_ratio(r, i);
    return d;
}

RationalFunction fam_d_det(long r, long n) {
    require(r >= 0, "fam-d-det: r >= 0");
    require(n >= 1, "fam-d-det: n >= 1");
    RationalFunction d(1);
    for (long i = 0; i <= n - 1; ++i) d *= fam_d_ratio(r, i);
    return d;
}

RationalFunction aprime(long r, long n) {
    require(r >= 0, "aprime: r >= 0");
    require(n >= 1, "aprime: n >= 1");
    if (r >= n) return RationalFunction(1);
    return prop_d00(n - r);
}

RationalFunction fam0(long s, long t, long n) {
    require(t <= -1, "fam0: t <= -1");
    require(s >= t + 1, "fam0: s >= t+1");
    require(n >= 1, "fam0: n >= 1");
    return RationalFunction(0);
}

RationalFunction dst2dts_factor(long s, long t, long n) {
    require(0 <= s && s <= t, "dst2dts: 0 <= s <= t");
    require(n >= 1, "dst2dts: n >= 1");
    RationalFunction g(1);
    for (long i = 0; i <= t - s - 1; ++i) g *= LP(i + s - 1, n) / NP(i + s + 1, n);
    return g;
}

// ---- Theorem for D_{1,1}(n) -------------------------------------------------

namespace {

// rho_k(4(mu-2), 1/(2k-1)!) * (mu-1)_{3k-2} / (2 (mu/2+k-1/2)_{k-1})
RationalFunction d11_prefactor(long k) {
    RationalFunction rho_val = (k == 0)
        ? RationalFunction(Polynomial::linear(-8, 4))
        : RationalFunction(Rational(1) / fact_q(2 * k - 1));
    return rho_val * LP(-1, 3 * k - 2) /
           (RationalFunction(2) * HP(make_rational(2 * k - 1, 2), k - 1));
}

// The squared inner product shared by Theorem D11 and the PR1001 identity.
RationalFunction d11_inner_squared(long k) {
    RationalFunction p(1);
    for (long j = 1; j <= k - 1; ++j)
        p *= LP(2 * j + 1, j - 1) * HP(make_rational(4 * j + 1, 2), j - 1) /
             (NP(j, j - 1) * HP(make_rational(2 * j + 1, 2), j - 1));
    return p.pow(2);
}

RationalFunction d11_outer_odd(long k, long n) {
    RationalFunction p(1);
    for (long j = k; j <= (n - 1) / 2; ++j)
        p *= LP(2 * j, j).pow(2) * HP(make_rational(4 * j - 1, 2), j) *
             HP(make_rational(4 * j + 3, 2), j + 1) /
             (NP(j, j) * NP(j + 1, j + 1) * HP(make_rational(2 * j + 1, 2), j).pow(2));
    return p;
}

RationalFunction d11_outer_even(long k, long n) {
    RationalFunction p(1);
    for (long j = k; j <= n / 2; ++j)
        p *= LP(2 * j, j) * HP(make_rational(4 * j + 1, 2), j - 1) /
             (NP(j, j) * HP(make_rational(2 * j + 1, 2), j - 1));
    for (long j = k; j <= n / 2 - 1; ++j)
        p *= LP(2 * j, j) * HP(make_rational(4 * j + 3, 2), j + 1) /
             (NP(j + 1, j + 1) * HP(make_rational(2 * j + 1, 2), j));
    return p;
}

RationalFunction d11_theorem(long n) {
    long kmax = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
    RationalFunction sum(0);
    for (long k = 0; k <= kmax; ++k) {
        RationalFunction outer = (n % 2 == 1) ? d11_outer_odd(k, n) : d11_outer_even(k, n);
        sum += d11_prefactor(k) * d11_inner_squared(k) * outer;
    }
    return sum;
}

RationalFunction d11_recurrence(long n) {
    RationalFunction head(1);
    for (long j = 1; j <= n; ++j) head *= r00(j);
    RationalFunction sum(0);
    for (long k = 1; k <= floor_div(n + 1, 2); ++k) {
        RationalFunction tail(1);
        for (long j = 2 * k; j <= n; ++j) tail *= r00(j);
        sum += tail * pr1001_product(k);
    }
    return head + RationalFunction(Polynomial::linear(-1, 1)) / RationalFunction(2) * sum;
}

}  // namespace

RationalFunction thm_d11_sum(long n, D11Variant variant) {
    require(n >= 1, "thm-d11: n >= 1");
    return variant == D11Variant::Theorem ? d11_theorem(n) : d11_recurrence(n);
}

RationalFunction pr1001_product(long k) {
    require(k >= 1, "pr1001: k >= 1");
    RationalFunction p(1);
    for (long j = 1; j <= k - 1; ++j)
        p *= r10(j) * r01(j) / (r00(2 * j - 1) * r00(2 * j));
    return p;
}

RationalFunction pr1001_rhs(long k) {
    require(k >= 1, "pr1001: k >= 1");
    return LP(0, 3 * k - 3) /
           (RationalFunction(fact_q(2 * k - 1)) * HP(make_rational(2 * k - 1, 2), k - 1)) *
           d11_inner_squared(k);
}

// ---- Monstrous factors ------------------------------------------------------

RationalFunction c_factor(long n) {
    require(n >= 1, "c-factor: n >= 1");
    Rational c = make_rational((n % 2 == 0 ? 1 : -1) + 3, 2);
    for (long i = 1; i <= n; ++i)
        c *= Rational(factorial(static_cast<unsigned long>(i / 2))) / fact_q(i);
    return RationalFunction(c);
}

RationalFunction e_factor(long n) {
    require(n >= 1, "e-factor: n >= 1");
    RationalFunction e = LP(1, n);
    long b1 = floor_div(3 * floor_div(n - 1, 2), 2) - 2;
    for (long i = 1; i <= b1; ++i)
        e *= RationalFunction(Polynomial::linear(Rational(2 * i + 6), 1))
                 .pow(2 * floor_div(i + 2, 3));
    long half = floor_div(n, 2);
    long b2 = floor_div(3 * half, 2) - 2;
    long shift = 2 * floor_div(3 * (half + 1), 2) - 1;
    for (long i = 1; i <= b2; ++i)
        e *= RationalFunction(Polynomial::linear(Rational(2 * i + shift), 1))
                 .pow(2 * floor_div(3 * half - 2 * (i - 1), 6) - 1);
    return e;
}

RationalFunction fm_factor(long m, long n) {
    require(n >= 1, "fm-factor: n >= 1");
    RationalFunction f(1);
    for (long i = 1; i <= floor_div(n - 1, 4); ++i)
        f *= RationalFunction(Polynomial::linear(Rational(2 * i + n + m), 1)).pow(1 - 2 * i - m);
    for (long i = 1; i <= floor_div(n, 4) - 1; ++i)
        f *= RationalFunction(Polynomial::linear(Rational(-2 * i + 2 * n - 2 * m + 1), 1))
                 .pow(1 - 2 * i - m);
    return f;
}

RationalFunction f_factor(long n) {
    require(n >= 1, "f-factor: n >= 1");
    if (n % 2 == 0) return e_factor(n) * fm_factor(0, n);
    RationalFunction f = e_factor(n) * fm_factor(1, n);
    for (long i = 1; i <= (n - 5) / 2; ++i)
        f *= RationalFunction(Polynomial::linear(Rational(2 * i + 2 * n - 1), 1));
    return f;
}

RationalFunction monstrous_factor(const MonstrousFactors& mf) {
    switch (mf.which) {
        case MonstrousFactors::Which::C: return c_factor(mf.n);
        case MonstrousFactors::Which::E: return e_factor(mf.n);
        case MonstrousFactors::Which::F: return f_factor(mf.n);
        case MonstrousFactors::Which::Fm: return fm_factor(mf.m, mf.n);
    }
    throw std::logic_error("monstrous_factor: bad selector");
}

RationalFunction h_factor(long k) {
    require(k >= 0, "h-factor: k >= 0");
    RationalFunction rho_val = (k == 0)
        ? RationalFunction(Polynomial::linear(-2, 1)) / RationalFunction(Polynomial::mu()).pow(2)
        : RationalFunction(Rational(1) / (Rational(8) * Rational(double_factorial(2 * k - 2))));
    return two_pow(k) * rho_val * NP(make_rational(1, 2), k - 1).pow(2) * LP(-1, 3 * k - 2) /
           (HP(Rational(1), k - 1) * HP(make_rational(2 * k - 1, 2), k - 1) *
            HP(make_rational(4 * k - 1, 2), k));
}

RationalFunction section5_quotient(long n) {
    require(n >= 1, "sec5-quotient: n >= 1");
    long kmax, pref_exp;
    Rational big_shift;
    long big_len, half_len;
    switch (n % 4) {
        case 0:
            kmax = n / 2;
            pref_exp = (3 * n - 8) / 4;
            big_shift = make_rational(3 * n + 2, 4);
            big_len = (3 * n - 4) / 4;
            half_len = n / 2;
            break;
        case 2:
            kmax = n / 2;
            pref_exp = (3 * n - 6) / 4;
            big_shift = make_rational(3 * n, 4);
            big_len = (3 * n - 2) / 4;
            half_len = n / 2;
            break;
        case 1:
            kmax = (n + 1) / 2;
            pref_exp = (3 * n - 3) / 4;
            big_shift = make_rational(3 * n + 3, 4);
            big_len = (3 * n + 1) / 4;
            half_len = (n + 1) / 2;
            break;
        default:  // n = 3 mod 4
            kmax = (n + 1) / 2;
            pref_exp = (3 * n - 5) / 4;
            big_shift = make_rational(3 * n + 5, 4);
            big_len = (3 * n - 1) / 4;
            half_len = (n + 1) / 2;
            break;
    }
    RationalFunction fixed = two_pow(pref_exp) * HP(big_shift, big_len) /
                             HP(make_rational(1, 2), half_len);
    RationalFunction sum(0);
    for (long k = 0; k <= kmax; ++k)
        sum += h_factor(k) * HP(Rational(k), half_len - k) * fixed;
    return sum;
}

RationalFunction f_term(long ell, long k) {
    require(ell >= 1, "f-term: ell >= 1");
    require(k >= 1, "f-term: k >= 1");
    RationalFunction num = two_pow(3 * ell + k - 5) * LP(-1, 3 * k - 2) *
                           NP(make_rational(1, 2), k - 1).pow(2) *
                           HP(Rational(k), 2 * ell - k) *
                           HP(make_rational(6 * ell + 1, 2), 3 * ell - 1);
    RationalFunction den = RationalFunction(Rational(double_factorial(2 * k - 2))) *
                           HP(make_rational(1, 2), 2 * ell) * HP(Rational(1), k - 1) *
                           HP(make_rational(2 * k - 1, 2), k - 1) *
                           HP(make_rational(4 * k - 1, 2), k);
    return num / den;
}

std::pair<Polynomial, Polynomial> p_coefficients(long ell) {
    require(ell >= 1, "p-coefficients: ell >= 1");
    auto lin = [](long c) { return Polynomial::linear(Rational(c), 1); };
    Polynomial p1 = lin(4 * ell + 1) * lin(4 * ell + 3) * lin(6 * ell + 1) *
                    lin(6 * ell + 3) * lin(6 * ell + 5);
    Polynomial p0 = lin(4 * ell) * lin(4 * ell + 2) * lin(12 * ell - 1) * lin(12 * ell + 1) *
                    lin(12 * ell + 3) * lin(12 * ell + 5) * lin(12 * ell + 7) *
                    lin(12 * ell + 9);
    return {-p0, p1};
}

// ---- Registry -----------------------------------------------------------------

long FormulaParams::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        throw std::invalid_argument("formula: missing parameter '" + name + "'");
    return it->second;
}

const std::map<std::string, FormulaEntry>& formula_registry() {
    static const std::map<std::string, FormulaEntry> table = [] {
        std::map<std::string, FormulaEntry> t;
        auto P = [](const FormulaParams& p, const char* k) { return p.get(k); };

        auto add = [&t](const std::string& id, FormulaKind kind,
                        std::vector<std::string> params,
                        std::function<RationalFunction(const FormulaParams&)> fn) {
            t.emplace(id, FormulaEntry{kind, std::move(params), std::move(fn)});
        };

        add("kt", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return kt_ratio(P(p, "n")); });
        add("kt-sign", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return kt_ratio_sign_form(P(p, "n")); });
        add("kt-floor", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return kt_ratio_floor_form(P(p, "n")); });
        add("r00-even", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r00_even(P(p, "n")); });
        add("r00-odd", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r00_odd(P(p, "n")); });
        add("r10", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r10(P(p, "n")); });
        add("r01", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r01(P(p, "n")); });
        add("r20", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r20(P(p, "n")); });
        add("r02", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return r02(P(p, "n")); });
        add("dm11", FormulaKind::Ratio, {"n"},
            [P](const FormulaParams& p) { return dm11(P(p, "n")); });
        add("fam-a-even", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_a_even(P(p, "r"), P(p, "n")); });
        add("fam-a-odd", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_a_odd(P(p, "r"), P(p, "n")); });
        add("fam-b", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_b_ratio(P(p, "r"), P(p, "n")); });
        add("fam-c", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_c_ratio(P(p, "r"), P(p, "n")); });
        add("fam-d", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_d_ratio(P(p, "r"), P(p, "n")); });
        add("fam-e-left", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_e_left(P(p, "r"), P(p, "n")); });
        add("fam-e-right", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_e_right(P(p, "r"), P(p, "n")); });
        add("fam-f", FormulaKind::Ratio, {"r", "n"},
            [P](const FormulaParams& p) { return fam_f_ratio(P(p, "r"), P(p, "n")); });

        add("bindet", FormulaKind::Det, {"s", "t", "n"},
            [P](const FormulaParams& p) { return bindet(P(p, "s"), P(p, "t"), P(p, "n")); });
        add("prop-d00", FormulaKind::Det, {"n"},
            [P](const FormulaParams& p) { return prop_d00(P(p, "n")); });
        add("prop-d10", FormulaKind::Det, {"n"},
            [P](const FormulaParams& p) { return prop_d10(P(p, "n")); });
        add("prop-d01", FormulaKind::Det, {"n"},
            [P](const FormulaParams& p) { return prop_d01(P(p, "n")); });
        add("fam-a-det", FormulaKind::Det, {"r", "n"},
            [P](const FormulaParams& p) { return fam_a_det(P(p, "r"), P(p, "n")); });
        add("fam-b-det", FormulaKind::Det, {"r", "n"},
            [P](const FormulaParams& p) { return fam_b_det(P(p, "r"), P(p, "n")); });
        add("fam-c-det", FormulaKind::Det, {"r", "n"},
            [P](const FormulaParams& p) { return fam_c_det(P(p, "r"), P(p, "n")); });
        add("fam-d-det", FormulaKind::Det, {"r", "n"},
            [P](const FormulaParams& p) { return fam_d_det(P(p, "r"), P(p, "n")); });
        add("aprime", FormulaKind::Det, {"r", "n"},
            [P](const FormulaParams& p) { return aprime(P(p, "r"), P(p, "n")); });
        add("fam0", FormulaKind::Det, {"s", "t", "n"},
            [P](const FormulaParams& p) { return fam0(P(p, "s"), P(p, "t"), P(p, "n")); });
        add("dst2dts-factor", FormulaKind::Det, {"s", "t", "n"},
            [P](const FormulaParams& p) {
                return dst2dts_factor(P(p, "s"), P(p, "t"), P(p, "n"));
            });

        add("thm-d11", FormulaKind::Det, {"n"},
            [P](const FormulaParams& p) { return thm_d11_sum(P(p, "n")); });
        add("eq-cf1", FormulaKind::Det, {"n"},
            [P](const FormulaParams& p) {
                return thm_d11_sum(P(p, "n"), D11Variant::Recurrence);
            });
        add("sec5-quotient", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return section5_quotient(P(p, "n")); });
        add("pr1001-lhs", FormulaKind::Aux, {"k"},
            [P](const FormulaParams& p) { return pr1001_product(P(p, "k")); });
        add("pr1001-rhs", FormulaKind::Aux, {"k"},
            [P](const FormulaParams& p) { return pr1001_rhs(P(p, "k")); });
        add("c-factor", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return c_factor(P(p, "n")); });
        add("e-factor", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return e_factor(P(p, "n")); });
        add("f-factor", FormulaKind::Aux, {"n"},
            [P](const FormulaParams& p) { return f_factor(P(p, "n")); });
        add("fm-factor", FormulaKind::Aux, {"m", "n"},
            [P](const FormulaParams& p) { return fm_factor(P(p, "m"), P(p, "n")); });
        add("h-factor", FormulaKind::Aux, {"k"},
            [P](const FormulaParams& p) { return h_factor(P(p, "k")); });
        add("f-term", FormulaKind::Aux, {"ell", "k"},
            [P](const FormulaParams& p) { return f_term(P(p, "ell"), P(p, "k")); });
        add("p0", FormulaKind::Aux, {"ell"},
            [P](const FormulaParams& p) {
                return RationalFunction(p_coefficients(P(p, "ell")).first);
            });
        add("p1", FormulaKind::Aux, {"ell"},
            [P](const FormulaParams& p) {
                return RationalFunction(p_coefficients(P(p, "ell")).second);
            });
        return t;
    }();
    return table;
}

RationalFunction evaluate_formula(const std::string& id, const FormulaParams& params) {
    auto it = formula_registry().find(id);
    if (it == formula_registry().end())
        throw std::out_of_range("formula: unknown id '" + id + "'");
    return it->second.build(params);
}

namespace {

RationalFunction formula_of_kind(const std::string& id, const FormulaParams& params,
                                 FormulaKind kind, const char* what) {
    auto it = formula_registry().find(id);
    if (it == formula_registry().end() || it->second.kind != kind)
        throw std::out_of_range(std::string(what) + ": unknown id '" + id + "'");
    return it->second.build(params);
}

}  // namespace

RationalFunction ratio_formula(const std::string& id, const FormulaParams& params) {
    return formula_of_kind(id, params, FormulaKind::Ratio, "ratio_formula");
}

RationalFunction det_formula(const std::string& id, const FormulaParams& params) {
    return formula_of_kind(id, params, FormulaKind::Det, "det_formula");
}

}  // namespace hexdet
