#include "test_util.hpp"

#include "hexdet/combinatorics.hpp"

#include <doctest.h>

using namespace hexdet;
using hexdet::testutil::lin;

namespace {

long count_occurrences(const std::string& text, const std::string& needle) {
    long hits = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++hits;
    return hits;
}

}  // namespace

TEST_CASE("single paths are counted by binomials") {
    for (long x = 0; x <= 8; ++x)
        for (long y = 0; x + y <= 8; ++y) {
            RegionSpec region{x, y, 1, 0};
            EnumerationLimits limits{4, 200};
            CHECK(enumerate_path_tuples(region, {}, {}, limits) == binomial_int(x + y, y));
        }
}

TEST_CASE("tuple enumeration examples") {
    CHECK(enumerate_path_tuples({1, 1, 1, 1}, {}, {}) == 3);
    CHECK(enumerate_path_tuples({1, 1, 2, 1}, {1, 2}, {1, 2}) == 1);  // empty tuple
    CHECK(enumerate_path_tuples({1, 1, 2, 1}, {}, {}) == 6);
}

TEST_CASE("enumeration rejects bad input") {
    CHECK_THROWS_AS(enumerate_path_tuples({-2, 0, 2, 1}, {}, {}), std::domain_error);  // lambda+s<0
    CHECK_THROWS_AS(enumerate_path_tuples({1, 1, 2, 1}, {1}, {}), std::domain_error);  // |I|!=|J|
    CHECK_THROWS_AS(enumerate_path_tuples({1, 1, 2, 1}, {3}, {1}), std::domain_error);
    CHECK_THROWS_AS(enumerate_path_tuples({1, 1, 9, 1}, {}, {}), std::domain_error);   // cap
}

TEST_CASE("LGV agreement with the binomial determinant") {
    for (long s = 0; s <= 2; ++s)
        for (long t = 0; t <= 2; ++t)
            for (long lambda = 0; lambda <= 2; ++lambda)
                for (long n = 1; n <= 3; ++n) {
                    if (lambda + s > 4) continue;
                    RegionSpec region{s, t, n, lambda};
                    RationalFunction det =
                        determinant(build_matrix({s, t, n, DeltaMode::BinomialOnly}));
                    CHECK(Rational(enumerate_path_tuples(region, {}, {})) ==
                          det.eval(Rational(lambda + 2)));
                }
}

TEST_CASE("sum of minors examples") {
    CHECK(sum_of_minors(1, 1, 1) == RationalFunction(lin(1)));
    CHECK(sum_of_minors(1, 1, 2).eval(3) == 20);
    CHECK(sum_of_minors(2, 1, 2) == determinant(build_matrix({2, 1, 2, DeltaMode::WithDelta})));
}

TEST_CASE("sum of minors equals the determinant on a small plane") {
    for (long s = -1; s <= 3; ++s)
        for (long t = -1; t <= 3; ++t)
            for (long n = 1; n <= 3; ++n)
                CHECK(sum_of_minors(s, t, n) ==
                      determinant(build_matrix({s, t, n, DeltaMode::WithDelta})));
}

TEST_CASE("brute force tiling counts") {
    CHECK(brute_force_count({1, 1, 2, 1}) == 20);
    CHECK(brute_force_count({1, 1, 1, 1}) == 4);
    CHECK(brute_force_count({0, 0, 1, 0}) == 2);
    // odd s-t: the signed count equals the determinant, the raw count does not
    RegionSpec odd{1, 0, 2, 1};
    RationalFunction det = determinant(build_matrix({1, 0, 2, DeltaMode::WithDelta}));
    CHECK(Rational(brute_force_count(odd)) == det.eval(3));
    CHECK(brute_force_count(odd, false) > brute_force_count(odd));
}

TEST_CASE("render produces the stated geometry") {
    // n=4, t=2, lambda+s=5: lozenge 9 units wide, 6 tall
    std::string svg = render_region({3, 2, 4, 2});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("width=\"260\"") != std::string::npos);   // 9*20 + 6*10 + 2*10
    CHECK(svg.find("height=\"122\"") != std::string::npos);  // 6*17 + 2*10
    CHECK(count_occurrences(svg, "class=\"tri\"") == 8);

    // figure-2 parameters: width lambda+n+s = 10
    std::string wide = render_region({4, 2, 4, 2});
    CHECK(wide.find("width=\"280\"") != std::string::npos);
    CHECK(count_occurrences(wide, "class=\"tri\"") == 8);
}

TEST_CASE("render tiles the lozenge: one rhombus per step, w*h - n in total") {
    RegionSpec region{1, 1, 2, 1};
    auto tuples = collect_path_tuples(region);
    REQUIRE(tuples.size() == 6);
    long w = region.lambda + region.n + region.s;
    long h = region.n + region.t;
    for (const auto& tuple : tuples) {
        size_t steps = tuple.paths[0].size() + tuple.paths[1].size();
        std::string svg = render_region(region, tuple);
        long colored = count_occurrences(svg, "fill=\"white\" stroke=\"#404040\"") +
                       count_occurrences(svg, "fill=\"#d8d8d8\"") +
                       count_occurrences(svg, "fill=\"red\"");
        CHECK(colored == static_cast<long>(steps));
        CHECK(count_occurrences(svg, "class=\"rhombus\"") == w * h - region.n);
        CHECK(count_occurrences(svg, "fill=\"red\"") == 2);  // one end marker per path
    }
}
