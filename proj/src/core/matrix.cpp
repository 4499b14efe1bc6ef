#include "core/matrix.hpp"

#include <algorithm>

namespace ckinf {

Matrix Matrix::identity(std::size_t n) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix transpose(const Matrix& M) {
    Matrix T(M.cols, M.rows);
    for (std::size_t r = 0; r < M.rows; ++r)
        for (std::size_t c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
    return T;
}

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B) {
    require(A.cols == B.rows, "matrix dimension mismatch");
    Matrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            felem x = A.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(x, B.at(k, j)));
        }
    return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    require(A.cols == B.cols, "column count mismatch");
    Matrix C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
    return C;
}

Matrix col_submatrix(const Matrix& M, const std::vector<std::size_t>& cols) {
    Matrix S(M.rows, cols.size());
    for (std::size_t r = 0; r < M.rows; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j] < M.cols, "column index out of range");
            S.at(r, j) = M.at(r, cols[j]);
        }
    return S;
}

std::vector<std::size_t> rref(const Field& F, Matrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t pr = r;
        while (pr < M.rows && M.at(pr, c) == 0) ++pr;
        if (pr == M.rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(r, j));
        felem s = F.inv(M.at(r, c));
        for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(s, M.at(r, j));
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            felem f = M.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& F, Matrix M) { return rref(F, M).size(); }

felem det(const Field& F, Matrix M) {
    require(M.rows == M.cols, "determinant needs a square matrix");
    std::size_t n = M.rows;
    felem d = 1;
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && M.at(pr, c) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(pr, j), M.at(c, j));
            negate = !negate;
        }
        felem piv = M.at(c, c);
        d = F.mul(d, piv);
        felem s = F.inv(piv);
        for (std::size_t i = c + 1; i < n; ++i) {
            felem f = F.mul(s, M.at(i, c));
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(c, j)));
        }
    }
    return negate ? F.neg(d) : d;
}

Matrix kernel_basis(const Field& F, const Matrix& M) {
    Matrix R = M;
    auto pivots = rref(F, R);
    std::vector<bool> is_pivot(M.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix K(M.cols - pivots.size(), M.cols);
    std::size_t kr = 0;
    for (std::size_t f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        K.at(kr, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) K.at(kr, pivots[i]) = F.neg(R.at(i, f));
        ++kr;
    }
    return K;
}

Matrix rowspace_basis(const Field& F, Matrix M) {
    auto pivots = rref(F, M);
    Matrix B(pivots.size(), M.cols);
    std::copy(M.a.begin(), M.a.begin() + static_cast<std::ptrdiff_t>(pivots.size() * M.cols),
              B.a.begin());
    return B;
}

bool same_rowspace(const Field& F, const Matrix& A, const Matrix& B) {
    require(A.cols == B.cols, "column count mismatch");
    return rowspace_basis(F, A) == rowspace_basis(F, B);
}

bool in_rowspace(const Field& F, const Matrix& M, const std::vector<felem>& v) {
    require(v.size() == M.cols, "vector length mismatch");
    Matrix R(1, M.cols);
    R.a = v;
    return rank(F, vstack(M, R)) == rank(F, M);
}

bool is_zero(const Matrix& M) {
    return std::all_of(M.a.begin(), M.a.end(), [](felem x) { return x == 0; });
}

} // namespace ckinf
