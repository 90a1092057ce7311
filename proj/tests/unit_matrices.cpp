#include "test_util.hpp"

#include <doctest.h>

using namespace hexdet;
using hexdet::testutil::det_cofactor;
using hexdet::testutil::lin;
using hexdet::testutil::mu;
using hexdet::testutil::rf;

namespace {

PolyMatrix constant_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    PolyMatrix m(static_cast<long>(rows.size()),
                 static_cast<long>(rows.begin()->size()));
    long i = 1;
    for (const auto& row : rows) {
        long j = 1;
        for (long v : row) m.at(i, j++) = RationalFunction(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("build_matrix pins the shifted indices") {
    PolyMatrix d11 = build_matrix({1, 1, 2, DeltaMode::WithDelta});
    CHECK(d11.at(1, 1).eval(3) == 4);
    CHECK(d11.at(1, 2).eval(3) == 6);
    CHECK(d11.at(2, 1).eval(3) == 4);
    CHECK(d11.at(2, 2).eval(3) == 11);

    PolyMatrix d10 = build_matrix({1, 0, 2, DeltaMode::WithDelta});
    CHECK(d10.at(1, 1) == rf(Polynomial(1)));
    CHECK(d10.at(1, 2) == rf(lin(1)));
    CHECK(d10.at(2, 1) == rf(Polynomial(1)));
    CHECK(d10.at(2, 2) == rf(lin(1)));

    // no delta term for shifted diagonal: (i,j) = (0,1)
    PolyMatrix d01 = build_matrix({0, 1, 1, DeltaMode::WithDelta});
    CHECK(d01.at(1, 1) == rf(lin(-1)));

    CHECK_THROWS_AS(build_matrix({0, 0, 0, DeltaMode::WithDelta}), std::invalid_argument);
}

TEST_CASE("determinant examples") {
    CHECK(determinant(constant_matrix({{4, 6}, {4, 11}})) == RationalFunction(20));
    CHECK(determinant(build_matrix({1, 0, 2, DeltaMode::WithDelta})).is_zero());
    CHECK(determinant(build_matrix({0, 0, 2, DeltaMode::WithDelta})) == rf(lin(3)));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    for (long s = -1; s <= 2; ++s)
        for (long t = -1; t <= 2; ++t)
            for (long n = 1; n <= 4; ++n) {
                PolyMatrix m = build_matrix({s, t, n, DeltaMode::WithDelta});
                CHECK(determinant(m) == det_cofactor(m));
            }
    // entries with nontrivial denominators exercise the row clearing
    PolyMatrix frac(3, 3);
    for (long i = 1; i <= 3; ++i)
        for (long j = 1; j <= 3; ++j)
            frac.at(i, j) = RationalFunction(Polynomial(1), lin(i + 2 * j));
    CHECK(determinant(frac) == det_cofactor(frac));
}

TEST_CASE("determinants of built matrices are polynomials within the degree bound") {
    for (long s = -2; s <= 3; ++s)
        for (long t = -2; t <= 3; ++t)
            for (long n = 1; n <= 6; ++n) {
                RationalFunction d = determinant(build_matrix({s, t, n, DeltaMode::WithDelta}));
                CHECK(d.is_polynomial());
                long bound = 0;
                for (long j = t; j < t + n; ++j) bound += std::max(j, 0L);
                CHECK(d.num().degree() <= bound);
            }
}

TEST_CASE("laplace expansion along a delta row") {
    for (long s = -1; s <= 2; ++s)
        for (long t = -1; t <= 2; ++t)
            for (long n = 2; n <= 4; ++n) {
                // need a row index i with 1 <= i+s-t <= n
                long i = std::max(1L, 1 + t - s);
                if (i + s - t > n || i > n) continue;
                PolyMatrix d = build_matrix({s, t, n, DeltaMode::WithDelta});
                PolyMatrix b = build_matrix({s, t, n, DeltaMode::BinomialOnly});
                RationalFunction expansion =
                    ((s - t) % 2 == 0 ? RationalFunction(1) : RationalFunction(-1)) *
                    minor_det(d, MinorSelector{{i}, {i + s - t}});
                for (long j = 1; j <= n; ++j) {
                    RationalFunction term = b.at(i, j) * minor_det(d, MinorSelector{{i}, {j}});
                    expansion += ((i + j) % 2 == 0) ? term : -term;
                }
                CHECK(expansion == determinant(d));
            }
}

TEST_CASE("minor determinants") {
    PolyMatrix m = constant_matrix({{4, 6}, {4, 11}});
    CHECK(minor_det(m, MinorSelector{{1}, {1}}) == RationalFunction(11));
    CHECK(minor_det(m, MinorSelector{{1, 2}, {1, 2}}) == RationalFunction(1));
    PolyMatrix b = build_matrix({1, 1, 2, DeltaMode::BinomialOnly});
    CHECK(minor_det(b, MinorSelector{{1}, {1}}).eval(3) == 10);  // binom(5,2)
    CHECK_THROWS_AS(minor_det(m, MinorSelector{{3}, {1}}), std::out_of_range);
    CHECK_THROWS_AS(minor_det(m, MinorSelector{{1}, {}}), std::invalid_argument);
}

TEST_CASE("nullspace of the vanishing determinants") {
    auto basis = nullspace(build_matrix({1, 0, 2, DeltaMode::WithDelta}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == RationalFunction(-lin(1)));
    CHECK(basis[0][1] == RationalFunction(1));

    CHECK(nullspace(build_matrix({0, 0, 2, DeltaMode::WithDelta})).empty());

    auto big = nullspace(build_matrix({1, 0, 4, DeltaMode::WithDelta}));
    REQUIRE(big.size() == 1);
    CHECK(big[0].back() == RationalFunction(1));
}

TEST_CASE("kernel vectors solve the system exactly") {
    for (long n = 1; n <= 3; ++n) {
        PolyMatrix m = build_matrix({1, 0, 2 * n, DeltaMode::WithDelta});
        auto basis = nullspace(m);
        REQUIRE(basis.size() == 1);
        for (long i = 1; i <= 2 * n; ++i) {
            RationalFunction dot(0);
            for (long j = 1; j <= 2 * n; ++j)
                dot += m.at(i, j) * basis[0][static_cast<size_t>(j - 1)];
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("classical specializations") {
    // cyclically symmetric plane partitions in an n-cube
    const long cspp[] = {2, 5, 20, 132, 1452};
    // alternating sign matrix numbers
    const long asm_numbers[] = {1, 2, 7, 42, 429};
    for (long n = 1; n <= 5; ++n) {
        CHECK(determinant(build_matrix({0, 0, n, DeltaMode::WithDelta})).eval(2) ==
              cspp[n - 1]);
        CHECK(determinant(build_matrix({1, 1, n, DeltaMode::WithDelta})).eval(0) ==
              asm_numbers[n - 1]);
    }
}

TEST_CASE("matrix dump is row per line") {
    PolyMatrix m = build_matrix({1, 0, 2, DeltaMode::WithDelta});
    CHECK(m.dump() == "[1, μ + 1]\n[1, μ + 1]\n");
}
