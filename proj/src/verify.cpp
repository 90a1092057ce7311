#include "hexdet/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <thread>

namespace hexdet {

namespace {

using nlohmann::ordered_json;

RationalFunction det_st(long s, long t, long n) {
    return determinant(build_matrix({s, t, n, DeltaMode::WithDelta}));
}

Rational det_at(long s, long t, long n, const Rational& mu) {
    PolyMatrix m = build_matrix({s, t, n, DeltaMode::WithDelta});
    PolyMatrix c(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) c.at(i, j) = RationalFunction(m.at(i, j).eval(mu));
    return determinant(c).num().constant_value();
}

std::string rf_residual(const RationalFunction& r) {
    return r.is_zero() ? std::string() : r.pretty();
}

// One checkable statement: a default grid plus a per-point residual check
// that returns the empty string on success.
struct IdentityDef {
    std::function<std::vector<ParamPoint>(const GridOverrides&)> grid;
    std::function<std::string(const ParamPoint&)> check;
};

long n_top(const GridOverrides& g, long dflt) { return g.n_max.value_or(dflt); }
long r_top(const GridOverrides& g, long dflt) { return g.r_max.value_or(dflt); }

std::vector<ParamPoint> range_grid(const std::string& name, long lo, long hi) {
    std::vector<ParamPoint> pts;
    for (long v = lo; v <= hi; ++v) pts.push_back({{name, v}});
    return pts;
}

// ---- kernel certificate checks ---------------------------------------------

std::string check_kernel_e10(long n) {
    PolyMatrix m = build_matrix({1, 0, 2 * n, DeltaMode::WithDelta});
    KernelCertificate cert = kernel_certificate(m, n);
    if (static_cast<long>(cert.coefficients.size()) != 2 * n)
        return "kernel vector has wrong length";
    const auto& v = cert.coefficients;
    for (long i = 1; i <= 2 * n; ++i) {
        RationalFunction lhs(0);
        for (long j = 1; j <= 2 * n; ++j) {
            Polynomial binom =
                binomial_poly(Polynomial::mu() + Polynomial(i + j - 3), j - 1);
            lhs += RationalFunction(std::move(binom)) * v[static_cast<size_t>(j - 1)];
        }
        RationalFunction rhs =
            (i + 1 <= 2 * n) ? -v[static_cast<size_t>(i)] : RationalFunction(0);
        if (lhs != rhs)
            return "row " + std::to_string(i) + ": residual " + rf_residual(lhs - rhs);
    }
    for (long i = 1; i <= 2 * n; ++i) {
        RationalFunction dot(0);
        for (long j = 1; j <= 2 * n; ++j) dot += m.at(i, j) * v[static_cast<size_t>(j - 1)];
        if (!dot.is_zero()) return "matrix*kernel is nonzero in row " + std::to_string(i);
    }
    return {};
}

// Row-deleted kernel of D_{s,t}(2n); the dot product with the deleted row
// reproduces the asserted quotient.
std::string check_kernel_quotient(long s, long t, long n,
                                  const std::function<RationalFunction(long)>& quotient) {
    PolyMatrix m = build_matrix({s, t, 2 * n, DeltaMode::WithDelta});
    PolyMatrix trimmed = delete_rows_cols(m, MinorSelector{{2 * n}, {}});
    KernelCertificate cert = kernel_certificate(trimmed, n);
    if (static_cast<long>(cert.coefficients.size()) != 2 * n)
        return "kernel vector has wrong length";
    const auto& v = cert.coefficients;
    for (long i = 1; i <= 2 * n - 1; ++i) {
        RationalFunction dot(0);
        for (long j = 1; j <= 2 * n; ++j) dot += m.at(i, j) * v[static_cast<size_t>(j - 1)];
        if (!dot.is_zero()) return "kernel fails in row " + std::to_string(i);
    }
    RationalFunction last_row(0);
    for (long j = 1; j <= 2 * n; ++j) last_row += m.at(2 * n, j) * v[static_cast<size_t>(j - 1)];
    return rf_residual(last_row - quotient(n));
}

// ---- identity table ----------------------------------------------------------

const std::map<std::string, IdentityDef>& identity_table() {
    static const std::map<std::string, IdentityDef> table = [] {
        std::map<std::string, IdentityDef> t;

        t["thm-kt"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                RationalFunction form = kt_ratio(n);
                if (form != kt_ratio_sign_form(n)) return std::string("sign form differs");
                if (form != kt_ratio_floor_form(n)) return std::string("floor form differs");
                return rf_residual(det_st(1, 1, 2 * n) / det_st(1, 1, 2 * n - 1) - form);
            }};
        t["lem-e10"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) { return rf_residual(det_st(1, 0, 2 * p.at("n"))); }};
        t["lem-e01"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) { return rf_residual(det_st(0, 1, 2 * p.at("n"))); }};
        t["lem-r00"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(0, 0, 2 * n) / det_st(0, 0, 2 * n - 1) - r00_odd(n));
            }};
        t["lem-r20"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(2, 0, 2 * n) / det_st(2, 0, 2 * n - 1) - r20(n));
            }};
        t["lem-r02"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(0, 2, 2 * n) / det_st(0, 2, 2 * n - 1) - r02(n));
            }};
        t["prop-d00"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 7)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(0, 0, n) - prop_d00(n));
            }};
        t["prop-d10"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 7)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(1, 0, n) - prop_d10(n));
            }};
        t["prop-d01"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 7)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(0, 1, n) - prop_d01(n));
            }};
        t["cor-dm11"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(det_st(-1, 1, 2 * n + 1) / det_st(-1, 1, 2 * n) - dm11(n));
            }};
        t["thm-d11"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 10)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(thm_d11_sum(n) - det_st(1, 1, n));
            }};
        t["eq-cf1"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 8)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(thm_d11_sum(n, D11Variant::Recurrence) - thm_d11_sum(n));
            }};
        t["lem-pr1001"] = {
            [](const GridOverrides& g) { return range_grid("k", 1, n_top(g, 6)); },
            [](const ParamPoint& p) {
                long k = p.at("k");
                return rf_residual(pr1001_product(k) - pr1001_rhs(k));
            }};
        t["sec5-quotient"] = {
            [](const GridOverrides& g) { return range_grid("n", 4, n_top(g, 7)); },
            [](const ParamPoint& p) {
                long n = p.at("n");
                return rf_residual(c_factor(n) * f_factor(n) * section5_quotient(n) -
                                   det_st(1, 1, n));
            }};
        t["sec5-f-recurrence"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long ell = 1; ell <= 4; ++ell)
                    for (long k = 1; k <= n_top(g, 6); ++k)
                        pts.push_back({{"ell", ell}, {"k", k}});
                return pts;
            },
            [](const ParamPoint& p) {
                long ell = p.at("ell"), k = p.at("k");
                auto [p0, p1] = p_coefficients(ell);
                return rf_residual(RationalFunction(p1) * f_term(ell + 1, k) +
                                   RationalFunction(p0) * f_term(ell, k));
            }};
        t["prop-bindet"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long tt = 0; tt <= 3; ++tt)
                    for (long ss = -1; ss <= 3; ++ss)
                        for (long n = 1; n <= n_top(g, 5); ++n)
                            pts.push_back({{"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long s = p.at("s"), tt = p.at("t"), n = p.at("n");
                RationalFunction lhs =
                    determinant(build_matrix({s, tt, n, DeltaMode::BinomialOnly}));
                return rf_residual(lhs - bindet(s, tt, n));
            }};
        t["cor-aprime"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 0; r <= r_top(g, 4); ++r)
                    for (long n = 1; n <= n_top(g, 5); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(-r, -r, n) - aprime(r, n));
            }};
        t["prop-fam0"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long tt = -3; tt <= -1; ++tt)
                    for (long ss = tt + 1; ss <= 3; ++ss)
                        for (long n = 1; n <= n_top(g, 4); ++n)
                            pts.push_back({{"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long s = p.at("s"), tt = p.at("t"), n = p.at("n");
                return rf_residual(det_st(s, tt, n) - fam0(s, tt, n));
            }};
        t["thm-dst2dts"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long ss = 0; ss <= 3; ++ss)
                    for (long tt = ss; tt <= 3; ++tt)
                        for (long n = 1; n <= n_top(g, 5); ++n)
                            pts.push_back({{"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long s = p.at("s"), tt = p.at("t"), n = p.at("n");
                return rf_residual(det_st(s, tt, n) -
                                   dst2dts_factor(s, tt, n) * det_st(tt, s, n));
            }};
        t["thm-fam-a"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 0; r <= r_top(g, 3); ++r)
                    for (long n = 1; n <= 2 * r + n_top(g, 6); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(2 * r, 0, n) - fam_a_det(r, n));
            }};
        t["thm-fam-a-reduction"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 3); ++r)
                    for (long n = 2 * r + 1; n <= 2 * r + n_top(g, 5); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                Polynomial image = Polynomial::linear(Rational(6 * r), 1);
                return rf_residual(det_st(2 * r, 0, n) -
                                   det_st(0, 0, n - 2 * r).substitute(image));
            }};
        t["thm-fam-b"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 3); ++r)
                    for (long n = 1; n <= 2 * r + n_top(g, 5); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(2 * r - 1, 0, n) - fam_b_det(r, n));
            }};
        t["thm-fam-b-reduction"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 3); ++r)
                    for (long n = 2 * r - 1; n <= 2 * r + n_top(g, 4); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                Polynomial image = Polynomial::linear(Rational(6 * r - 6), 1);
                return rf_residual(det_st(2 * r - 1, 0, n) -
                                   det_st(1, 0, n - 2 * r + 2).substitute(image));
            }};
        t["conj-fam-c"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 2); ++r)
                    for (long n = r; n <= n_top(g, 5); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(2 * r, 1, 2 * n) - fam_c_det(r, n));
            }};
        t["conj-fam-d"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 0; r <= r_top(g, 2); ++r)
                    for (long n = 1; n <= n_top(g, 5); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(-1, 2 * r, 2 * n) - fam_d_det(r, n));
            }};
        t["cor-fam-e"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 3); ++r)
                    for (long n = r; n <= r + n_top(g, 3); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                RationalFunction left = det_st(2 * r - 1, 1, 2 * n) /
                                        det_st(2 * r - 1, 1, 2 * n - 1) -
                                        fam_e_left(r, n);
                if (!left.is_zero()) return "left quotient: " + left.pretty();
                RationalFunction right = det_st(1, 2 * r - 1, 2 * n) /
                                         det_st(1, 2 * r - 1, 2 * n - 1) -
                                         fam_e_right(r, n);
                if (!right.is_zero()) return "right quotient: " + right.pretty();
                return std::string();
            }};
        t["cor-fam-f"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 3); ++r)
                    for (long n = r; n <= r + n_top(g, 3); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                return rf_residual(det_st(-1, 2 * r - 1, 2 * n + 1) /
                                       det_st(-1, 2 * r - 1, 2 * n) -
                                   fam_f_ratio(r, n));
            }};
        t["conj-reci"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long r = 1; r <= r_top(g, 2); ++r)
                    for (long n = r; n <= n_top(g, 4); ++n)
                        pts.push_back({{"r", r}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long r = p.at("r"), n = p.at("n");
                Polynomial image = Polynomial::linear(Rational(1 - 6 * n), Rational(-1));
                return rf_residual(det_st(2 * r - 1, 0, 2 * n + 1) -
                                   det_st(0, 0, 2 * n - 2 * r + 2).substitute(image));
            }};
        t["mirror-symmetry"] = {
            // Valid where both tiling regions exist: lambda+s >= 0 for the
            // original lozenge and t >= 0 for its mirror image.
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long mu = 2; mu <= 6; ++mu)
                    for (long ss = -1; ss <= 3; ++ss)
                        for (long tt = 0; tt <= 3; ++tt)
                            for (long n = 1; n <= n_top(g, 4); ++n)
                                if ((mu - 2) + ss >= 0)
                                    pts.push_back({{"mu", mu}, {"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long mu = p.at("mu"), ss = p.at("s"), tt = p.at("t"), n = p.at("n");
                long lambda = mu - 2;
                Rational lhs = det_at(ss, tt, n, Rational(mu));
                Rational rhs = det_at(tt + lambda, ss + lambda, n, Rational(4 - mu));
                Rational diff = lhs - rhs;
                return diff == 0 ? std::string() : to_string(diff);
            }};
        t["djd"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long ss = -2; ss <= 4; ++ss)
                    for (long tt = -2; tt <= 4; ++tt)
                        for (long n = 1; n <= n_top(g, 6); ++n)
                            pts.push_back({{"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long ss = p.at("s"), tt = p.at("t"), n = p.at("n");
                if (n >= 3) {
                    RationalFunction res = djd_residual(ss, tt, n);
                    if (!res.is_zero()) return "identity residual: " + res.pretty();
                }
                RationalFunction cross = djd_eval(ss, tt, n) - det_st(ss, tt, n);
                if (!cross.is_zero()) return "engine mismatch: " + cross.pretty();
                return std::string();
            }};
        t["sum-of-minors"] = {
            [](const GridOverrides& g) {
                std::vector<ParamPoint> pts;
                for (long ss = -1; ss <= 3; ++ss)
                    for (long tt = -1; tt <= 3; ++tt)
                        for (long n = 1; n <= n_top(g, 4); ++n)
                            pts.push_back({{"s", ss}, {"t", tt}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                long ss = p.at("s"), tt = p.at("t"), n = p.at("n");
                return rf_residual(sum_of_minors(ss, tt, n) - det_st(ss, tt, n));
            }};
        t["oracle-count"] = {
            [](const GridOverrides& g) {
                const std::pair<long, long> shifts[] = {{0, 0}, {1, 1}, {1, 0},
                                                        {0, 1}, {2, 0}, {2, 1}};
                std::vector<ParamPoint> pts;
                for (auto [ss, tt] : shifts)
                    for (long lambda = 0; lambda <= 2; ++lambda)
                        for (long n = 1; n <= n_top(g, 3); ++n)
                            if (lambda + ss >= 0)
                                pts.push_back(
                                    {{"s", ss}, {"t", tt}, {"lambda", lambda}, {"n", n}});
                return pts;
            },
            [](const ParamPoint& p) {
                RegionSpec region{p.at("s"), p.at("t"), p.at("n"), p.at("lambda")};
                Integer counted = brute_force_count(region);
                Rational det_val =
                    det_at(region.s, region.t, region.n, Rational(region.lambda + 2));
                Rational diff = Rational(counted) - det_val;
                return diff == 0 ? std::string() : to_string(diff);
            }};
        t["kernel-e10"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 4)); },
            [](const ParamPoint& p) { return check_kernel_e10(p.at("n")); }};
        t["kernel-r20"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 4)); },
            [](const ParamPoint& p) {
                return check_kernel_quotient(2, 0, p.at("n"), r20);
            }};
        t["kernel-r02"] = {
            [](const GridOverrides& g) { return range_grid("n", 1, n_top(g, 4)); },
            [](const ParamPoint& p) {
                return check_kernel_quotient(0, 2, p.at("n"), r02);
            }};
        return t;
    }();
    return table;
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& o : outcomes)
        if (!o.pass) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    ordered_json doc;
    doc["identity"] = identity;
    doc["conjecture"] = conjecture;
    doc["status"] = all_pass() ? "pass" : "fail";
    doc["millis"] = millis;
    ordered_json points = ordered_json::array();
    for (size_t i = 0; i < grid.size(); ++i) {
        ordered_json pt;
        pt["identity"] = identity;
        pt["parameters"] = ordered_json::object();
        for (const auto& [k, v] : grid[i]) pt["parameters"][k] = v;
        pt["status"] = outcomes[i].pass ? "pass" : "fail";
        if (!outcomes[i].pass) pt["residual"] = outcomes[i].residual;
        pt["millis"] = outcomes[i].millis;
        points.push_back(std::move(pt));
    }
    doc["points"] = std::move(points);
    return doc.dump(2);
}

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, def] : identity_table()) ids.push_back(id);
    return ids;
}

bool is_conjecture(const std::string& id) { return id.rfind("conj-", 0) == 0; }

VerificationReport verify_identity(const std::string& id, const GridOverrides& grid,
                                   int workers) {
    auto it = identity_table().find(id);
    if (it == identity_table().end())
        throw std::out_of_range("verify: unknown identity '" + id + "'");
    const IdentityDef& def = it->second;

    VerificationReport report;
    report.identity = id;
    report.conjecture = is_conjecture(id);
    report.grid = def.grid(grid);
    report.outcomes.resize(report.grid.size());

    auto run_point = [&](size_t i) {
        auto start = std::chrono::steady_clock::now();
        PointOutcome& out = report.outcomes[i];
        try {
            out.residual = def.check(report.grid[i]);
            out.pass = out.residual.empty();
        } catch (const std::exception& e) {
            out.pass = false;
            out.residual = std::string("error: ") + e.what();
        }
        out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    };

    auto total_start = std::chrono::steady_clock::now();
    if (workers <= 1) {
        for (size_t i = 0; i < report.grid.size(); ++i) run_point(i);
    } else {
        std::atomic<size_t> next{0};
        auto drain = [&] {
            for (size_t i = next.fetch_add(1); i < report.grid.size(); i = next.fetch_add(1))
                run_point(i);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - total_start)
                        .count();
    return report;
}

bool check_recurrence(const std::vector<RationalFunction>& data,
                      const std::function<std::vector<RationalFunction>(long)>& coeffs_at,
                      long ell_base) {
    size_t order = coeffs_at(ell_base).size();
    if (order == 0) throw std::invalid_argument("check_recurrence: empty coefficient list");
    if (data.size() < order)
        throw std::invalid_argument("check_recurrence: data shorter than coefficient list");
    for (size_t i = 0; i + order <= data.size(); ++i) {
        std::vector<RationalFunction> coeffs = coeffs_at(ell_base + static_cast<long>(i));
        if (coeffs.size() != order)
            throw std::invalid_argument("check_recurrence: coefficient count changed");
        RationalFunction acc(0);
        for (size_t c = 0; c < order; ++c) acc += coeffs[c] * data[i + c];
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool check_recurrence(const std::vector<RationalFunction>& data,
                      const std::vector<RationalFunction>& coeffs) {
    return check_recurrence(
        data, [&coeffs](long) { return coeffs; }, 0);
}

}  // namespace hexdet
