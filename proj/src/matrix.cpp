#include "hexdet/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hexdet {

PolyMatrix::PolyMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), RationalFunction());
}

RationalFunction& PolyMatrix::at(long i, long j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix: index out of range");
    return entries_[static_cast<size_t>(i - 1) * static_cast<size_t>(cols_) +
                    static_cast<size_t>(j - 1)];
}

const RationalFunction& PolyMatrix::at(long i, long j) const {
    return const_cast<PolyMatrix*>(this)->at(i, j);
}

std::string PolyMatrix::dump(const std::string& var) const {
    std::ostringstream out;
    for (long i = 1; i <= rows_; ++i) {
        out << "[";
        for (long j = 1; j <= cols_; ++j) {
            if (j > 1) out << ", ";
            out << at(i, j).pretty(var);
        }
        out << "]\n";
    }
    return out.str();
}

PolyMatrix build_matrix(const ShiftSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("build_matrix: n must be positive");
    PolyMatrix m(spec.n, spec.n);
    for (long i = spec.s; i < spec.s + spec.n; ++i) {
        for (long j = spec.t; j < spec.t + spec.n; ++j) {
            Polynomial entry = binomial_poly(Polynomial::mu() + Polynomial(i + j - 2), j);
            if (spec.mode == DeltaMode::WithDelta && i == j)
                entry = entry + Polynomial(1);
            m.at(i - spec.s + 1, j - spec.t + 1) = RationalFunction(std::move(entry));
        }
    }
    return m;
}

namespace {

// Fraction-free elimination; entries must be polynomials. Returns the exact
// determinant, with the sign of any row swaps folded in.
Polynomial bareiss(std::vector<std::vector<Polynomial>>& m) {
    size_t n = m.size();
    if (n == 0) return Polynomial(1);
    Polynomial prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Polynomial();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

RationalFunction determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    long n = m.rows();
    std::vector<std::vector<Polynomial>> work(static_cast<size_t>(n));
    Polynomial scale(1);
    for (long i = 1; i <= n; ++i) {
        Polynomial row_lcm(1);
        for (long j = 1; j <= n; ++j) row_lcm = lcm(row_lcm, m.at(i, j).den());
        scale = scale * row_lcm;
        auto& row = work[static_cast<size_t>(i - 1)];
        row.reserve(static_cast<size_t>(n));
        for (long j = 1; j <= n; ++j) {
            const RationalFunction& e = m.at(i, j);
            row.push_back(e.num() * row_lcm.exact_div(e.den()));
        }
    }
    Polynomial det = bareiss(work);
    return RationalFunction(std::move(det), std::move(scale));
}

PolyMatrix delete_rows_cols(const PolyMatrix& m, const MinorSelector& sel) {
    auto check = [](const std::vector<long>& idx, long bound, const char* what) {
        long prev = 0;
        for (long v : idx) {
            if (v < 1 || v > bound) throw std::out_of_range(std::string("minor: ") + what);
            if (v <= prev) throw std::invalid_argument("minor: indices must be strictly increasing");
            prev = v;
        }
    };
    check(sel.deleted_rows, m.rows(), "row index out of range");
    check(sel.deleted_cols, m.cols(), "column index out of range");
    std::vector<long> keep_rows, keep_cols;
    for (long i = 1; i <= m.rows(); ++i)
        if (!std::binary_search(sel.deleted_rows.begin(), sel.deleted_rows.end(), i))
            keep_rows.push_back(i);
    for (long j = 1; j <= m.cols(); ++j)
        if (!std::binary_search(sel.deleted_cols.begin(), sel.deleted_cols.end(), j))
            keep_cols.push_back(j);
    PolyMatrix sub(static_cast<long>(keep_rows.size()), static_cast<long>(keep_cols.size()));
    for (size_t i = 0; i < keep_rows.size(); ++i)
        for (size_t j = 0; j < keep_cols.size(); ++j)
            sub.at(static_cast<long>(i + 1), static_cast<long>(j + 1)) =
                m.at(keep_rows[i], keep_cols[j]);
    return sub;
}

RationalFunction minor_det(const PolyMatrix& m, const MinorSelector& sel) {
    return determinant(delete_rows_cols(m, sel));
}

KernelCertificate kernel_certificate(const PolyMatrix& m, long n) {
    auto basis = nullspace(m);
    if (basis.size() != 1)
        throw std::domain_error("kernel certificate: kernel dimension is " +
                                std::to_string(basis.size()) + ", not 1");
    KernelCertificate cert{n, std::move(basis[0])};
    if (cert.coefficients.empty() || cert.coefficients.back() != RationalFunction(1))
        throw std::domain_error("kernel certificate: last coordinate is not 1");
    return cert;
}

std::vector<std::vector<RationalFunction>> nullspace(const PolyMatrix& m) {
    long rows = m.rows(), cols = m.cols();
    std::vector<std::vector<RationalFunction>> a(static_cast<size_t>(rows));
    for (long i = 1; i <= rows; ++i) {
        a[static_cast<size_t>(i - 1)].reserve(static_cast<size_t>(cols));
        for (long j = 1; j <= cols; ++j) a[static_cast<size_t>(i - 1)].push_back(m.at(i, j));
    }
    // Gauss-Jordan over Q(mu); gcd reduction happens inside the arithmetic.
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(static_cast<size_t>(cols), false);
    size_t r = 0;
    for (long c = 0; c < cols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][static_cast<size_t>(c)].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        RationalFunction inv = a[r][static_cast<size_t>(c)].reciprocal();
        for (long j = 0; j < cols; ++j) a[r][static_cast<size_t>(j)] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][static_cast<size_t>(c)].is_zero()) continue;
            RationalFunction f = a[i][static_cast<size_t>(c)];
            for (long j = 0; j < cols; ++j)
                a[i][static_cast<size_t>(j)] -= f * a[r][static_cast<size_t>(j)];
        }
        pivot_col_of_row.push_back(c);
        is_pivot_col[static_cast<size_t>(c)] = true;
        ++r;
    }
    std::vector<std::vector<RationalFunction>> basis;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot_col[static_cast<size_t>(f)]) continue;
        std::vector<RationalFunction> v(static_cast<size_t>(cols), RationalFunction());
        v[static_cast<size_t>(f)] = RationalFunction(1);
        for (size_t row = 0; row < pivot_col_of_row.size(); ++row)
            v[static_cast<size_t>(pivot_col_of_row[row])] = -a[row][static_cast<size_t>(f)];
        size_t last = v.size();
        while (last > 0 && v[last - 1].is_zero()) --last;
        RationalFunction inv = v[last - 1].reciprocal();
        for (auto& e : v) e *= inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hexdet
