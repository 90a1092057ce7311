#include "test_util.hpp"

#include "hexdet/verify.hpp"

#include <json.hpp>

#include <doctest.h>

#include <algorithm>

using namespace hexdet;
using hexdet::testutil::lin;

TEST_CASE("identity registry is complete and executable") {
    auto ids = identity_ids();
    CHECK(ids.size() == 35);
    for (const char* expected :
         {"thm-kt", "lem-e10", "lem-e01", "lem-r00", "lem-r20", "lem-r02", "prop-d00",
          "prop-d10", "prop-d01", "cor-dm11", "eq-cf1", "lem-pr1001", "thm-d11",
          "sec5-quotient", "sec5-f-recurrence", "prop-bindet", "cor-aprime", "prop-fam0",
          "thm-dst2dts", "thm-fam-a", "thm-fam-a-reduction", "thm-fam-b",
          "thm-fam-b-reduction", "conj-fam-c", "conj-fam-d", "cor-fam-e", "cor-fam-f",
          "conj-reci", "mirror-symmetry", "djd", "sum-of-minors", "oracle-count",
          "kernel-e10", "kernel-r20", "kernel-r02"})
        CHECK(std::find(ids.begin(), ids.end(), expected) != ids.end());
    CHECK_THROWS_AS(verify_identity("no-such-identity"), std::out_of_range);
}

TEST_CASE("small verification runs pass") {
    GridOverrides small;
    small.n_max = 3;
    for (const char* id : {"thm-kt", "lem-e10", "lem-e01", "prop-d00", "kernel-e10"}) {
        VerificationReport report = verify_identity(id, small);
        CHECK(report.all_pass());
        CHECK(report.outcomes.size() == report.grid.size());
    }
    CHECK(verify_identity("thm-kt", small).grid.size() == 3);
}

TEST_CASE("conjectures are flagged but verified") {
    GridOverrides small;
    small.n_max = 3;
    small.r_max = 1;
    VerificationReport report = verify_identity("conj-fam-c", small);
    CHECK(report.conjecture);
    CHECK(report.all_pass());
    CHECK(!verify_identity("thm-kt", small).conjecture);
    CHECK(is_conjecture("conj-reci"));
    CHECK(!is_conjecture("cor-fam-e"));
}

TEST_CASE("reports serialize to the documented JSON schema") {
    VerificationReport report = verify_identity("lem-pr1001");
    nlohmann::json doc = nlohmann::json::parse(report.to_json());
    CHECK(doc["identity"] == "lem-pr1001");
    CHECK(doc["conjecture"] == false);
    CHECK(doc["status"] == "pass");
    CHECK(doc["points"].size() == report.grid.size());
    for (const auto& pt : doc["points"]) {
        CHECK(pt["identity"] == "lem-pr1001");
        CHECK(pt["status"] == "pass");
        CHECK(pt.contains("parameters"));
        CHECK(pt.contains("millis"));
        CHECK(!pt.contains("residual"));
    }
}

TEST_CASE("worker fan-out is deterministic") {
    GridOverrides small;
    small.n_max = 4;
    VerificationReport seq = verify_identity("prop-bindet", small, 1);
    VerificationReport par = verify_identity("prop-bindet", small, 4);
    REQUIRE(seq.outcomes.size() == par.outcomes.size());
    CHECK(seq.grid == par.grid);
    for (size_t i = 0; i < seq.outcomes.size(); ++i) {
        CHECK(seq.outcomes[i].pass == par.outcomes[i].pass);
        CHECK(seq.outcomes[i].residual == par.outcomes[i].residual);
    }
}

TEST_CASE("recurrence checker") {
    RationalFunction c(lin(1));
    std::vector<RationalFunction> constant{c, c, c};
    CHECK(check_recurrence(constant, {RationalFunction(-1), RationalFunction(1)}));
    CHECK(!check_recurrence(constant, {RationalFunction(1), RationalFunction(1)}));
    CHECK_THROWS_AS(check_recurrence({c}, std::vector<RationalFunction>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        check_recurrence({c}, {RationalFunction(1), RationalFunction(1)}),
        std::invalid_argument);

    // column k=2 of the f table against the ell-dependent coefficients
    std::vector<RationalFunction> column;
    for (long ell = 1; ell <= 5; ++ell) column.push_back(f_term(ell, 2));
    auto coeffs_at = [](long ell) {
        auto [p0, p1] = p_coefficients(ell);
        return std::vector<RationalFunction>{RationalFunction(p0), RationalFunction(p1)};
    };
    CHECK(check_recurrence(column, coeffs_at, 1));
}
