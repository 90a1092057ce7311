#include "test_util.hpp"

#include "hexdet/condensation.hpp"

#include <doctest.h>

using namespace hexdet;

TEST_CASE("DJD residual vanishes") {
    CHECK(djd_residual(1, 1, 3).is_zero());
    CHECK(djd_residual(0, 0, 4).is_zero());
    CHECK(djd_residual(-1, 2, 3).is_zero());
    CHECK_THROWS_AS(djd_residual(0, 0, 2), std::invalid_argument);
}

TEST_CASE("condensation engine matches Bareiss") {
    for (long s = -2; s <= 2; ++s)
        for (long t = -2; t <= 2; ++t)
            for (long n = 1; n <= 4; ++n)
                CHECK(djd_eval(s, t, n) ==
                      determinant(build_matrix({s, t, n, DeltaMode::WithDelta})));
}

TEST_CASE("zero central divisor falls back to Bareiss") {
    // D_{1,-1}(2) = 0 by the vanishing family, so the (0,-2,4) recursion
    // cannot divide by it.
    CHECK(determinant(build_matrix({1, -1, 2, DeltaMode::WithDelta})).is_zero());
    CHECK(djd_eval(0, -2, 4) == determinant(build_matrix({0, -2, 4, DeltaMode::WithDelta})));
}

TEST_CASE("base cases") {
    // n=1 with shifted indices (2,0): no delta, binom(mu,0) = 1
    CHECK(djd_eval(2, 0, 1) == RationalFunction(1));
    CHECK_THROWS_AS(djd_eval(0, 0, 0), std::invalid_argument);
}

TEST_CASE("a session reuses its cache across calls") {
    CondensationSession session;
    RationalFunction first = session.eval(1, 1, 5);
    RationalFunction again = session.eval(1, 1, 5);
    CHECK(first == again);
    CHECK(first == determinant(build_matrix({1, 1, 5, DeltaMode::WithDelta})));
}
