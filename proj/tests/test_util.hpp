#pragma once

#include "hexdet/matrix.hpp"

namespace hexdet::testutil {

inline Polynomial mu() { return Polynomial::mu(); }

// mu + c
inline Polynomial lin(long c) { return Polynomial::linear(Rational(c), 1); }

inline RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

// Laplace expansion along the first row; the independent oracle for the
// Bareiss path. Quadratic blowup, fine for n <= 4.
inline RationalFunction det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: not square");
    long n = m.rows();
    if (n == 0) return RationalFunction(1);
    if (n == 1) return m.at(1, 1);
    RationalFunction total(0);
    for (long j = 1; j <= n; ++j) {
        if (m.at(1, j).is_zero()) continue;
        RationalFunction sub = det_cofactor(delete_rows_cols(m, MinorSelector{{1}, {j}}));
        RationalFunction term = m.at(1, j) * sub;
        total += (j % 2 == 1) ? term : -term;
    }
    return total;
}

}  // namespace hexdet::testutil
