#pragma once
#include <cstddef>
#include <vector>

#include "core/field.hpp"

namespace ckinf {

// Dense row-major matrix; entries live in one field, passed to each operation.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<felem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    felem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    felem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Matrix identity(std::size_t n);
    bool operator==(const Matrix&) const = default;
};

Matrix transpose(const Matrix& M);
Matrix matmul(const Field& F, const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix col_submatrix(const Matrix& M, const std::vector<std::size_t>& cols);

// In-place reduced row echelon form with deterministic first-nonzero pivoting;
// returns the pivot column indices in ascending order.
std::vector<std::size_t> rref(const Field& F, Matrix& M);
std::size_t rank(const Field& F, Matrix M);
felem det(const Field& F, Matrix M);
// Rows form the canonical (reduced echelon) basis of the right kernel.
Matrix kernel_basis(const Field& F, const Matrix& M);
// Nonzero rows of the reduced echelon form: a canonical row-space basis.
Matrix rowspace_basis(const Field& F, Matrix M);
bool same_rowspace(const Field& F, const Matrix& A, const Matrix& B);
bool in_rowspace(const Field& F, const Matrix& M, const std::vector<felem>& v);
bool is_zero(const Matrix& M);

} // namespace ckinf
