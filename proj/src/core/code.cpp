#include "core/code.hpp"

#include <algorithm>

namespace ckinf {

LinearCode make_code(FieldPtr F, Matrix G) {
    require(F != nullptr, "code needs a field");
    require(G.rows >= 1 && G.cols >= 1, "generator must be nonempty");
    require(rank(*F, G) == G.rows, "generator must have full row rank");
    return LinearCode{std::move(F), std::move(G)};
}

LinearCode dual(const LinearCode& C) {
    Matrix K = kernel_basis(*C.F, C.G);
    require(K.rows >= 1, "dual code is trivial");
    return LinearCode{C.F, std::move(K)};
}

bool enumeration_fits(const Field& F, std::size_t dim, std::uint64_t max_enum) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > max_enum / F.q) return false;
        total *= F.q;
    }
    return total <= max_enum;
}

std::vector<std::uint64_t> weight_distribution_exhaustive(const LinearCode& C, const Budgets& b) {
    const Field& F = *C.F;
    const std::size_t N = C.length(), K = C.dim();
    if (!enumeration_fits(F, K, b.max_enum)) fail_budget("codeword enumeration budget exceeded");

    // scaled[i][c] = c * (row i), precomputed so the walk only adds vectors.
    std::vector<std::vector<std::vector<felem>>> scaled(K);
    for (std::size_t i = 0; i < K; ++i) {
        scaled[i].assign(F.q, std::vector<felem>(N, 0));
        for (felem c = 0; c < F.q; ++c)
            for (std::size_t j = 0; j < N; ++j) scaled[i][c][j] = F.mul(c, C.G.at(i, j));
    }

    std::vector<std::uint64_t> wd(N + 1, 0);
    std::vector<std::vector<felem>> partial(K + 1, std::vector<felem>(N, 0));
    std::vector<felem> coef(K, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == K) {
            std::size_t w = 0;
            for (felem x : partial[K]) w += x != 0;
            ++wd[w];
        } else {
            felem c = coef[depth];
            const auto& row = scaled[depth][c];
            for (std::size_t j = 0; j < N; ++j) partial[depth + 1][j] = F.add(partial[depth][j], row[j]);
            ++depth;
            continue;
        }
        // Backtrack to the deepest level with an unused coefficient.
        while (depth > 0 && coef[depth - 1] + 1 == F.q) coef[--depth] = 0;
        if (depth == 0) break;
        ++coef[depth - 1];
        --depth;
    }
    return wd;
}

int min_distance_exhaustive(const LinearCode& C, const Budgets& b) {
    auto wd = weight_distribution_exhaustive(C, b);
    for (std::size_t w = 1; w < wd.size(); ++w)
        if (wd[w] > 0) return static_cast<int>(w);
    fail_internal("no nonzero codeword found");
}

int min_distance_by_dependence(const LinearCode& C, const Budgets& b) {
    const Field& F = *C.F;
    Matrix H = kernel_basis(F, C.G);
    const std::size_t N = C.length(), R = H.rows;
    std::uint64_t budget_left = b.max_subsets;
    for (std::size_t w = 1; w <= R; ++w) {
        bool found =
            for_each_subset(N, w, budget_left, [&](const std::vector<std::size_t>& idx) {
                return rank(F, col_submatrix(H, idx)) < idx.size();
            });
        if (found) return static_cast<int>(w);
    }
    return static_cast<int>(R + 1);
}

int min_distance_auto(const LinearCode& C, const Budgets& b, std::string* method_used) {
    if (enumeration_fits(*C.F, C.dim(), b.max_enum)) {
        if (method_used) *method_used = "exhaustive";
        return min_distance_exhaustive(C, b);
    }
    if (method_used) *method_used = "dependence-search";
    return min_distance_by_dependence(C, b);
}

LinearCode schur_product(const LinearCode& A, const LinearCode& B) {
    require(A.F->same_as(*B.F), "operands live in different fields");
    require(A.length() == B.length(), "operands have different lengths");
    const Field& F = *A.F;
    Matrix P(A.dim() * B.dim(), A.length());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j)
            for (std::size_t c = 0; c < A.length(); ++c)
                P.at(i * B.dim() + j, c) = F.mul(A.G.at(i, c), B.G.at(j, c));
    Matrix basis = rowspace_basis(F, P);
    require(basis.rows >= 1, "product code is trivial");
    return LinearCode{A.F, std::move(basis)};
}

bool mds_by_columns(const LinearCode& C, const Budgets& b) {
    const Field& F = *C.F;
    std::uint64_t budget_left = b.max_subsets;
    bool deficient =
        for_each_subset(C.length(), C.dim(), budget_left, [&](const std::vector<std::size_t>& idx) {
            return rank(F, col_submatrix(C.G, idx)) < idx.size();
        });
    return !deficient;
}

const char* to_string(CodeKind k) {
    switch (k) {
        case CodeKind::MDS: return "MDS";
        case CodeKind::NMDS: return "NMDS";
        case CodeKind::AMDSOnly: return "AMDS-only";
        case CodeKind::Other: return "Other";
    }
    return "Other";
}

CodeClass classify(const LinearCode& C, const Budgets& b) {
    CodeClass out;
    const int N = static_cast<int>(C.length());
    const int K = static_cast<int>(C.dim());
    out.d = min_distance_auto(C, b, &out.method_d);
    out.d_dual = min_distance_auto(dual(C), b, &out.method_dual);
    if (out.d == N - K + 1) {
        out.kind = CodeKind::MDS;
    } else {
        bool amds_primal = out.d == N - K;
        bool amds_dual = out.d_dual == K;
        if (amds_primal && amds_dual) out.kind = CodeKind::NMDS;
        else if (amds_primal || amds_dual) out.kind = CodeKind::AMDSOnly;
        else out.kind = CodeKind::Other;
    }
    return out;
}

} // namespace ckinf
