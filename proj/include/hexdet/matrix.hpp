#pragma once

#include "hexdet/pochhammer.hpp"

#include <vector>

namespace hexdet {

enum class DeltaMode { WithDelta, BinomialOnly };

// Parameters of the shifted determinant: row indices s..s+n-1, column
// indices t..t+n-1. BinomialOnly drops the Kronecker delta.
struct ShiftSpec {
    long s = 0;
    long t = 0;
    long n = 1;
    DeltaMode mode = DeltaMode::WithDelta;
};

// Row-major matrix over Q(mu). External indices are 1-based.
class PolyMatrix {
public:
    PolyMatrix(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    RationalFunction& at(long i, long j);
    const RationalFunction& at(long i, long j) const;

    std::string dump(const std::string& var = "μ") const;

private:
    long rows_, cols_;
    std::vector<RationalFunction> entries_;
};

// Rows and columns to delete, 1-based, each sorted and duplicate-free.
struct MinorSelector {
    std::vector<long> deleted_rows;
    std::vector<long> deleted_cols;
};

struct KernelCertificate {
    long n = 0;
    std::vector<RationalFunction> coefficients;  // c_{n,1..m}, last entry 1
};

PolyMatrix build_matrix(const ShiftSpec& spec);

// Exact determinant by fraction-free Bareiss elimination over the polynomial
// ring (denominators cleared row-wise first). Rejects non-square input.
RationalFunction determinant(const PolyMatrix& m);

RationalFunction minor_det(const PolyMatrix& m, const MinorSelector& sel);

// Basis of the right kernel over Q(mu), each vector scaled so its last
// nonzero coordinate is 1. Rectangular input allowed.
std::vector<std::vector<RationalFunction>> nullspace(const PolyMatrix& m);

PolyMatrix delete_rows_cols(const PolyMatrix& m, const MinorSelector& sel);

// The unique kernel vector of m, normalized to end in 1. Rejects matrices
// whose kernel dimension is not 1 or whose vector does not end in a nonzero
// coordinate.
KernelCertificate kernel_certificate(const PolyMatrix& m, long n);

}  // namespace hexdet
