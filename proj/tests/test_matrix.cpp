#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "core/matrix.hpp"

using namespace ckinf;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937& rng) {
    Matrix M(r, c);
    for (auto& x : M.a) x = rng() % F.q;
    return M;
}

}  // namespace

TEST_CASE("reduced echelon form and rank") {
    auto F = Field::make(7, 1);
    Matrix M(3, 4);
    M.a = {1, 2, 3, 4, 2, 4, 6, 2, 0, 0, 1, 1};
    auto pivots = rref(F, M);
    CHECK(pivots == std::vector<std::size_t>{0, 2, 3});
    CHECK(rank(F, M) == 3);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        CHECK(M.at(i, pivots[i]) == 1);
        for (std::size_t r = 0; r < M.rows; ++r)
            if (r != i) CHECK(M.at(r, pivots[i]) == 0);
    }
}

TEST_CASE("determinant matches cofactor expansion on small cases") {
    auto F = Field::make(13, 1);
    Matrix A(2, 2);
    A.a = {3, 5, 7, 11};
    // 3*11 - 5*7 = -2
    CHECK(det(F, A) == F.sub(F.mul(3, 11), F.mul(5, 7)));
    Matrix I = Matrix::identity(4);
    CHECK(det(F, I) == 1);
    std::swap(I.at(0, 0), I.at(1, 0));
    std::swap(I.at(0, 1), I.at(1, 1));
    CHECK(det(F, I) == F.neg(1));
}

TEST_CASE("vandermonde determinant equals difference product") {
    auto F = Field::make(13, 1);
    std::vector<felem> pts{2, 5, 6, 11};
    Matrix V(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) V.at(i, j) = F.pow(pts[j], static_cast<std::int64_t>(i));
    felem prod = 1;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) prod = F.mul(prod, F.sub(pts[j], pts[i]));
    CHECK(det(F, V) == prod);
}

TEST_CASE("determinant is multiplicative") {
    auto F = Field::make(3, 2);
    std::mt19937 rng(42);
    for (int t = 0; t < 50; ++t) {
        Matrix A = random_matrix(F, 3, 3, rng), B = random_matrix(F, 3, 3, rng);
        CHECK(det(F, matmul(F, A, B)) == F.mul(det(F, A), det(F, B)));
    }
}

TEST_CASE("kernel basis spans the right kernel") {
    std::mt19937 rng(7);
    for (auto [p, m] : {std::pair{2u, 3u}, {5u, 1u}, {3u, 2u}}) {
        auto F = Field::make(p, m);
        for (int t = 0; t < 30; ++t) {
            Matrix M = random_matrix(F, 3, 6, rng);
            Matrix K = kernel_basis(F, M);
            CHECK(K.rows == 6 - rank(F, M));
            CHECK(rank(F, K) == K.rows);
            CHECK(is_zero(matmul(F, M, transpose(K))));
            CHECK(same_rowspace(F, kernel_basis(F, K), rowspace_basis(F, M)));
        }
    }
}

TEST_CASE("row space helpers") {
    auto F = Field::make(5, 1);
    Matrix A(2, 3);
    A.a = {1, 2, 3, 0, 1, 4};
    Matrix B(3, 3);
    B.a = {1, 2, 3, 1, 3, 2, 2, 4, 1};  // row3 = row1 scaled and mixed
    CHECK(same_rowspace(F, A, B));
    CHECK(in_rowspace(F, A, {2, 4, 1}));
    CHECK_FALSE(in_rowspace(F, A, {0, 0, 1}));
}

TEST_CASE("column submatrix and stacking") {
    auto F = Field::make(7, 1);
    Matrix M(2, 4);
    M.a = {0, 1, 2, 3, 4, 5, 6, 0};
    Matrix S = col_submatrix(M, {3, 1});
    CHECK(S.rows == 2);
    CHECK(S.at(0, 0) == 3);
    CHECK(S.at(1, 1) == 5);
    Matrix V = vstack(M, M);
    CHECK(V.rows == 4);
    CHECK(rank(F, V) == rank(F, M));
}

TEST_CASE("matmul agrees with manual dot products") {
    auto F = Field::make(2, 4);
    std::mt19937 rng(3);
    Matrix A = random_matrix(F, 2, 3, rng), B = random_matrix(F, 3, 2, rng);
    Matrix C = matmul(F, A, B);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            felem s = 0;
            for (std::size_t k = 0; k < 3; ++k) s = F.add(s, F.mul(A.at(i, k), B.at(k, j)));
            CHECK(C.at(i, j) == s);
        }
}
