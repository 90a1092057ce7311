#include "hexdet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using hexdet::FormulaParams;
using hexdet::GridOverrides;
using hexdet::Integer;
using hexdet::Rational;
using hexdet::RationalFunction;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
    long s = 0, t = 0, n = 1, r = 0, lambda = 0, k = 0, ell = 1, m = 0;
    std::string mu;
    long n_max = 0, r_max = 0;
    std::string engine = "bareiss";
    bool json = false;
    std::string out;
    int workers = 1;
    bool include_conjectures = false;
    long cap = 4;
    bool unsigned_count = false;
    bool dump_matrix = false;
    bool drop_last_row = false;
    bool binomial_only = false;
    std::string formula_id;
    std::string identity_id;
};

void emit(const std::string& text, const std::string& out_file) {
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::domain_error("cannot open output file '" + out_file + "'");
        f << text;
    }
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
}

std::string value_text(const RationalFunction& v, bool json) {
    if (!json) return v.pretty();
    ordered_json doc;
    doc["value"] = v.pretty();
    doc["numerator_coeffs"] = v.num().coeff_list();
    doc["denominator_coeffs"] = v.den().coeff_list();
    return doc.dump(2);
}

int cmd_det(const Options& opt) {
    hexdet::DeltaMode mode =
        opt.binomial_only ? hexdet::DeltaMode::BinomialOnly : hexdet::DeltaMode::WithDelta;
    hexdet::PolyMatrix matrix = hexdet::build_matrix({opt.s, opt.t, opt.n, mode});
    if (opt.dump_matrix) std::cerr << matrix.dump();
    RationalFunction det;
    if (opt.engine == "bareiss") {
        det = hexdet::determinant(matrix);
    } else if (opt.engine == "djd") {
        if (opt.binomial_only)
            throw std::domain_error("--engine djd applies to the delta determinant only");
        det = hexdet::djd_eval(opt.s, opt.t, opt.n);
    } else {
        throw std::domain_error("unknown engine '" + opt.engine + "'");
    }
    if (!opt.mu.empty()) {
        Rational value = det.eval(hexdet::parse_rational(opt.mu));
        if (opt.json) {
            ordered_json doc;
            doc["s"] = opt.s;
            doc["t"] = opt.t;
            doc["n"] = opt.n;
            doc["mu"] = opt.mu;
            doc["value"] = hexdet::to_string(value);
            emit(doc.dump(2), opt.out);
        } else {
            emit(hexdet::to_string(value), opt.out);
        }
        return kExitOk;
    }
    emit(value_text(det, opt.json), opt.out);
    return kExitOk;
}

int cmd_formula(const Options& opt, const std::vector<std::string>& given_flags) {
    FormulaParams params;
    for (const auto& name : given_flags) {
        if (name == "s") params.values["s"] = opt.s;
        if (name == "t") params.values["t"] = opt.t;
        if (name == "n") params.values["n"] = opt.n;
        if (name == "r") params.values["r"] = opt.r;
        if (name == "k") params.values["k"] = opt.k;
        if (name == "ell") params.values["ell"] = opt.ell;
        if (name == "m") params.values["m"] = opt.m;
    }
    RationalFunction value = hexdet::evaluate_formula(opt.formula_id, params);
    if (!opt.mu.empty()) {
        emit(hexdet::to_string(value.eval(hexdet::parse_rational(opt.mu))), opt.out);
        return kExitOk;
    }
    emit(value_text(value, opt.json), opt.out);
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    std::vector<std::string> ids;
    if (opt.identity_id == "all") {
        for (const auto& id : hexdet::identity_ids())
            if (opt.include_conjectures || !hexdet::is_conjecture(id)) ids.push_back(id);
    } else {
        ids.push_back(opt.identity_id);
    }
    GridOverrides grid;
    if (opt.n_max > 0) grid.n_max = opt.n_max;
    if (opt.r_max > 0) grid.r_max = opt.r_max;

    bool failed = false;
    ordered_json reports = ordered_json::array();
    std::ostringstream plain;
    for (const auto& id : ids) {
        hexdet::VerificationReport report = hexdet::verify_identity(id, grid, opt.workers);
        bool pass = report.all_pass();
        if (!pass && !report.conjecture) failed = true;
        if (opt.json) {
            reports.push_back(ordered_json::parse(report.to_json()));
        } else {
            size_t passed = 0;
            for (const auto& o : report.outcomes) passed += o.pass ? 1 : 0;
            plain << id << (report.conjecture ? " (conjecture)" : "") << ": "
                  << (pass ? "pass" : "FAIL") << " [" << passed << "/"
                  << report.outcomes.size() << " points, " << report.millis << " ms]\n";
            for (size_t i = 0; i < report.outcomes.size(); ++i) {
                if (report.outcomes[i].pass) continue;
                plain << "  point";
                for (const auto& [key, val] : report.grid[i]) plain << " " << key << "=" << val;
                plain << ": " << report.outcomes[i].residual << "\n";
            }
        }
    }
    if (opt.json)
        emit(ids.size() == 1 ? reports[0].dump(2) : reports.dump(2), opt.out);
    else
        emit(plain.str(), opt.out);
    return failed ? kExitDomain : kExitOk;
}

int cmd_oracle(const Options& opt) {
    hexdet::RegionSpec region{opt.s, opt.t, opt.n, opt.lambda};
    hexdet::EnumerationLimits limits;
    limits.max_n = opt.cap;
    Integer count = hexdet::brute_force_count(region, !opt.unsigned_count, limits);
    if (opt.json) {
        ordered_json doc;
        doc["s"] = opt.s;
        doc["t"] = opt.t;
        doc["n"] = opt.n;
        doc["lambda"] = opt.lambda;
        doc["signed"] = !opt.unsigned_count;
        doc["count"] = count.get_str();
        emit(doc.dump(2), opt.out);
    } else {
        emit(count.get_str(), opt.out);
    }
    return kExitOk;
}

int cmd_minors(const Options& opt) {
    RationalFunction value = hexdet::sum_of_minors(opt.s, opt.t, opt.n);
    emit(value_text(value, opt.json), opt.out);
    return kExitOk;
}

int cmd_render(const Options& opt) {
    hexdet::RegionSpec region{opt.s, opt.t, opt.n, opt.lambda};
    std::string svg = hexdet::render_region(region);
    if (opt.out.empty()) throw std::domain_error("render requires --out FILE");
    std::ofstream f(opt.out);
    if (!f) throw std::domain_error("cannot open output file '" + opt.out + "'");
    f << svg;
    std::cout << "wrote " << opt.out << "\n";
    return kExitOk;
}

int cmd_kernel(const Options& opt) {
    hexdet::PolyMatrix m =
        hexdet::build_matrix({opt.s, opt.t, opt.n, hexdet::DeltaMode::WithDelta});
    if (opt.drop_last_row)
        m = hexdet::delete_rows_cols(m, hexdet::MinorSelector{{opt.n}, {}});
    auto basis = hexdet::nullspace(m);
    if (opt.json) {
        ordered_json doc = ordered_json::array();
        for (const auto& v : basis) {
            ordered_json vec = ordered_json::array();
            for (const auto& e : v) vec.push_back(e.pretty());
            doc.push_back(std::move(vec));
        }
        emit(doc.dump(2), opt.out);
        return kExitOk;
    }
    std::ostringstream text;
    text << "kernel dimension " << basis.size() << "\n";
    for (const auto& v : basis) {
        text << "(";
        for (size_t i = 0; i < v.size(); ++i) text << (i ? ", " : "") << v[i].pretty();
        text << ")\n";
    }
    emit(text.str(), opt.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact evaluation and verification of the shifted binomial determinants "
                 "D_{s,t}(n) and their closed forms"};
    app.require_subcommand(1);

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--s", opt.s, "row shift s");
        cmd->add_option("--t", opt.t, "column shift t");
        cmd->add_option("--n", opt.n, "matrix size n");
        cmd->add_flag("--json", opt.json, "JSON output");
        cmd->add_option("--out", opt.out, "write output to FILE");
    };

    CLI::App* det = app.add_subcommand("det", "determinant of D_{s,t}(n), symbolic in mu");
    add_common(det);
    det->add_option("--mu", opt.mu, "evaluate at mu = p/q");
    det->add_option("--engine", opt.engine, "bareiss|djd")
        ->check(CLI::IsMember({"bareiss", "djd"}));
    det->add_flag("--binomial-only", opt.binomial_only, "drop the Kronecker delta");
    det->add_flag("--dump-matrix", opt.dump_matrix, "dump the matrix to stderr");

    CLI::App* formula = app.add_subcommand("formula", "evaluate a closed form from the registry");
    formula->add_option("id", opt.formula_id, "formula id, e.g. kt, r00-even, fam-a-det")
        ->required();
    add_common(formula);
    formula->add_option("--mu", opt.mu, "evaluate at mu = p/q");
    formula->add_option("--r", opt.r, "family parameter r");
    formula->add_option("--k", opt.k, "summation index k");
    formula->add_option("--ell", opt.ell, "recurrence index ell");
    formula->add_option("--m", opt.m, "F_m selector m");

    CLI::App* verify = app.add_subcommand("verify", "check identities over parameter grids");
    verify->add_option("id", opt.identity_id, "identity id or 'all'")->required();
    verify->add_flag("--json", opt.json, "JSON report");
    verify->add_option("--out", opt.out, "write the report to FILE");
    verify->add_option("--n-max", opt.n_max, "override the grid's n range");
    verify->add_option("--r-max", opt.r_max, "override the grid's r range");
    verify->add_option("--workers", opt.workers, "parallel grid workers")
        ->check(CLI::Range(1, 256));
    verify->add_flag("--include-conjectures", opt.include_conjectures,
                     "run conj-* identities in 'verify all'");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force tiling count (independent of all determinant code)");
    add_common(oracle);
    oracle->add_option("--lambda", opt.lambda, "hole parameter lambda = mu - 2");
    oracle->add_option("--cap", opt.cap, "enumeration cap on n");
    oracle->add_flag("--unsigned", opt.unsigned_count, "count without parity signs");

    CLI::App* minors = app.add_subcommand("minors", "signed sum of delta-position minors");
    add_common(minors);

    CLI::App* render = app.add_subcommand("render", "SVG picture of the tiling region");
    add_common(render);
    render->add_option("--lambda", opt.lambda, "hole parameter lambda = mu - 2");

    CLI::App* kernel = app.add_subcommand("kernel", "right kernel of the matrix of D_{s,t}(n)");
    add_common(kernel);
    kernel->add_flag("--drop-last-row", opt.drop_last_row,
                     "delete the last row before computing the kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (det->parsed()) return cmd_det(opt);
        if (formula->parsed()) {
            std::vector<std::string> given;
            for (const char* name : {"s", "t", "n", "r", "k", "ell", "m"})
                if (formula->count(std::string("--") + name) > 0) given.push_back(name);
            return cmd_formula(opt, given);
        }
        if (verify->parsed()) return cmd_verify(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (minors->parsed()) return cmd_minors(opt);
        if (render->parsed()) return cmd_render(opt);
        if (kernel->parsed()) return cmd_kernel(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
