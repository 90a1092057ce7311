#pragma once

#include "hexdet/pochhammer.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hexdet {

// ---- Quotient formulas ----------------------------------------------------

// D_{1,1}(2n)/D_{1,1}(2n-1), Pochhammer form. The sign and floor variants of
// the same statement are exposed for cross-checking.
RationalFunction kt_ratio(long n);
RationalFunction kt_ratio_sign_form(long n);
RationalFunction kt_ratio_floor_form(long n);

RationalFunction r00_even(long n);  // R_{0,0}(2n)
RationalFunction r00_odd(long n);   // R_{0,0}(2n-1)
RationalFunction r00(long i);       // parity dispatch, r00(0) = 1
RationalFunction r10(long n);
RationalFunction r01(long n);
RationalFunction r20(long n);       // D_{2,0}(2n)/D_{2,0}(2n-1)
RationalFunction r02(long n);       // D_{0,2}(2n)/D_{0,2}(2n-1)
RationalFunction dm11(long n);      // D_{-1,1}(2n+1)/D_{-1,1}(2n)

RationalFunction fam_a_even(long r, long n);  // R_{2r,0}(2n)
RationalFunction fam_a_odd(long r, long n);   // R_{2r,0}(2n-1)
RationalFunction fam_a_ratio(long r, long i); // R_{2r,0}(i), parity dispatch
RationalFunction fam_b_ratio(long r, long n); // R_{2r-1,0}(n)
RationalFunction fam_c_ratio(long r, long n); // R_{2r,1}(n)
RationalFunction fam_d_ratio(long r, long n); // R_{-1,2r}(n), three cases
RationalFunction fam_e_left(long r, long n);  // D_{2r-1,1}(2n)/D_{2r-1,1}(2n-1)
RationalFunction fam_e_right(long r, long n); // D_{1,2r-1}(2n)/D_{1,2r-1}(2n-1)
RationalFunction fam_f_ratio(long r, long n); // D_{-1,2r-1}(2n+1)/D_{-1,2r-1}(2n)

// ---- Determinant formulas -------------------------------------------------

RationalFunction bindet(long s, long t, long n);  // det without the delta, t >= 0
RationalFunction prop_d00(long n);                // D_{0,0}(n)
RationalFunction prop_d10(long n);                // D_{1,0}(n)
RationalFunction prop_d01(long n);                // D_{0,1}(n)
RationalFunction fam_a_det(long r, long n);       // D_{2r,0}(n)
RationalFunction fam_b_det(long r, long n);       // D_{2r-1,0}(n)
RationalFunction fam_c_det(long r, long n);       // D_{2r,1}(2n), n >= r
RationalFunction fam_d_det(long r, long n);       // D_{-1,2r}(2n)
RationalFunction aprime(long r, long n);          // D_{-r,-r}(n)
RationalFunction fam0(long s, long t, long n);    // 0 on its domain
RationalFunction dst2dts_factor(long s, long t, long n);

// ---- Single-sum closed form for D_{1,1}(n) and its precursor --------------

enum class D11Variant { Theorem, Recurrence };

// The two-case (odd/even n) single-sum evaluation of D_{1,1}(n); the
// Recurrence variant is the unrolled-recurrence form it was derived from.
RationalFunction thm_d11_sum(long n, D11Variant variant = D11Variant::Theorem);

// Product of R_{1,0}R_{0,1}/(R_{0,0}R_{0,0}) over j < k, and the product-free
// right-hand side it collapses to.
RationalFunction pr1001_product(long k);
RationalFunction pr1001_rhs(long k);

// ---- Quotient machinery for the monstrous formula -------------------------

RationalFunction c_factor(long n);
RationalFunction e_factor(long n);
RationalFunction f_factor(long n);
RationalFunction fm_factor(long m, long n);

struct MonstrousFactors {
    enum class Which { C, E, F, Fm } which;
    long n = 1;
    long m = 0;  // Fm only
};
RationalFunction monstrous_factor(const MonstrousFactors& mf);

// Common factor h(k) of the four-case quotient; free of n.
RationalFunction h_factor(long k);

// Asserted value of D_{1,1}(n)/(C(n)F(n)), selected by n mod 4.
RationalFunction section5_quotient(long n);

// Summand f(l,k) of the n = 4l case.
RationalFunction f_term(long ell, long k);

// (p0(l), p1(l)) with p1(l) f(l+1,k) + p0(l) f(l,k) = 0.
std::pair<Polynomial, Polynomial> p_coefficients(long ell);

// ---- Registry ---------------------------------------------------------------

enum class FormulaKind { Ratio, Det, Aux };

struct FormulaParams {
    std::map<std::string, long> values;
    long get(const std::string& name) const;
};

struct FormulaEntry {
    FormulaKind kind;
    std::vector<std::string> params;
    std::function<RationalFunction(const FormulaParams&)> build;
};

const std::map<std::string, FormulaEntry>& formula_registry();

// Evaluates a registry entry; throws std::out_of_range for unknown ids and
// std::domain_error for parameters outside the statement's range.
RationalFunction evaluate_formula(const std::string& id, const FormulaParams& params);
RationalFunction ratio_formula(const std::string& id, const FormulaParams& params);
RationalFunction det_formula(const std::string& id, const FormulaParams& params);

}  // namespace hexdet
