#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace ckinf {

struct Budgets {
    std::uint64_t max_enum = 1ull << 27;     // codeword enumeration cap on q^dim
    std::uint64_t max_subsets = 1ull << 24;  // column-subset examination cap
};

struct LinearCode {
    FieldPtr F;
    Matrix G;  // full row rank
    std::size_t length() const { return G.cols; }
    std::size_t dim() const { return G.rows; }
};

LinearCode make_code(FieldPtr F, Matrix G);
LinearCode dual(const LinearCode& C);

// True when q^dim stays within the enumeration budget.
bool enumeration_fits(const Field& F, std::size_t dim, std::uint64_t max_enum);

// Counts codewords of each weight by enumerating all q^dim messages in
// lexicographic coefficient order.
std::vector<std::uint64_t> weight_distribution_exhaustive(const LinearCode& C,
                                                          const Budgets& b = {});
int min_distance_exhaustive(const LinearCode& C, const Budgets& b = {});
// Smallest w such that some w columns of a parity check matrix are linearly
// dependent; subsets scanned in lexicographic order.
int min_distance_by_dependence(const LinearCode& C, const Budgets& b = {});
int min_distance_auto(const LinearCode& C, const Budgets& b, std::string* method_used);

// Componentwise-product span of all row pairs.
LinearCode schur_product(const LinearCode& A, const LinearCode& B);
bool mds_by_columns(const LinearCode& C, const Budgets& b = {});

enum class CodeKind { MDS, NMDS, AMDSOnly, Other };
const char* to_string(CodeKind k);

struct CodeClass {
    CodeKind kind = CodeKind::Other;
    int d = 0, d_dual = 0;
    std::string method_d, method_dual;
};

// Computes both distances eagerly. MDS: d = N-dim+1. NMDS: d = N-dim and
// d_dual = dim. AMDS-only: exactly one side almost-MDS. Other: the rest.
CodeClass classify(const LinearCode& C, const Budgets& b = {});

// Lexicographic subset iteration helper shared by the search routines.
// Visits all size-w subsets of {0..n-1}; visitor returns true to stop early.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t w, std::uint64_t& budget_left, Visit visit) {
    if (w > n) return false;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        if (budget_left == 0) fail_budget("subset enumeration budget exceeded");
        --budget_left;
        if (visit(idx)) return true;
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace ckinf
