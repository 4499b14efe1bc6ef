#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "core/constructions.hpp"

namespace ckinf {

using bigint = boost::multiprecision::cpp_int;
using WeightDistribution = std::vector<bigint>;

bigint binom(std::uint64_t n, std::uint64_t k);
bigint ipow(const bigint& base, std::uint64_t e);
// Division that must leave no remainder; anything else is a transcription bug.
bigint exact_div(const bigint& num, const bigint& den, const std::string& what);

enum class SumDomain { fq, fqstar };

// Exact count of l-element subsets of S summing to b, by direct enumeration
// when C(n, l) is small and meet-in-the-middle otherwise.
bigint subset_sum_bruteforce(const EvaluationSet& S, std::size_t l, felem b,
                             const Budgets& budgets = {});
// Closed-form count of l-subsets of the domain summing to zero.
bigint subset_sum_closed(std::uint64_t q, std::uint32_t p, std::size_t l, SumDomain domain);

struct ZeroSumSearch {
    bool zero_sum_free = true;
    std::vector<std::size_t> witness_indices;  // lexicographically first, when present
    std::vector<felem> witness;
};
ZeroSumSearch find_zero_sum_subset(const EvaluationSet& S, std::size_t k,
                                   const Budgets& budgets = {});
bool is_k_zero_sum_free(const EvaluationSet& S, std::size_t k, const Budgets& budgets = {});

// Verdict for ck_infty(S, v, k): MDS exactly when S is k-zero-sum free, else
// NMDS; distances follow from the verdict. The scaling vector never matters.
struct CkClassification {
    CodeKind kind = CodeKind::MDS;
    int d = 0, d_dual = 0;
    ZeroSumSearch search;
};
CkClassification classify_ck(const EvaluationSet& S, std::size_t k, const Budgets& budgets = {});

struct WdPair {
    WeightDistribution primal, dual;
};

// Defect-1 recursion seeded by A_{N-k} = a_min (and A_k of the dual).
WdPair nmds_wdist_from_Amin(std::size_t N, std::size_t k, std::uint64_t q, const bigint& a_min);
// Textbook distribution of an [N, k, N-k+1] code.
WeightDistribution mds_wdist(std::size_t N, std::size_t k, std::uint64_t q);

// Distribution of ck_infty(S, v, k) when S contains a k-zero-sum subset.
WdPair ck_wdist_formula(const EvaluationSet& S, std::size_t k, const Budgets& budgets = {});
// Specializations for S = F_q^* (excluded: k = q-2, (p,k) = (2, q-3)) and
// S = F_q (excluded: (p,k) = (2, q-2)); excluded parameters give MDS codes.
WdPair ck_wdist_fqstar(std::uint64_t q, std::uint32_t p, std::size_t k);
WdPair ck_wdist_fq(std::uint64_t q, std::uint32_t p, std::size_t k);

// Closed-form polynomial tables for S = F_q^*, k in {5, 6}, q = p^m > 8.
// corrupt_offset (testing hook) adds 1 to A_{q-k+corrupt_offset} after the
// exact divisions, so downstream cross-checks must flag the mismatch.
WeightDistribution table_wdist(std::uint64_t q, std::uint32_t p, std::size_t k,
                               int corrupt_offset = -1);

struct SchurStructureReport {
    std::string primal_case;  // "degree-doubled" | "boundary-evaluation" | "full-space"
    std::size_t primal_dim = 0, primal_expected_dim = 0;
    bool primal_match = false;
    std::string dual_case;  // "full-space" | "unit-plus-weighted-span"
    std::size_t dual_dim = 0, dual_expected_dim = 0;
    bool dual_match = false;
    int dual_square_min_weight = 0;  // measured only in the unit-plus-weighted-span case
};
// Verifies the predicted shape of C^2 and (C^perp)^2 for v = all-ones.
SchurStructureReport schur_square_structure(const EvaluationSet& S, std::size_t k);

struct NonGrsEvidence {
    std::string regime;  // "small-k" | "large-k"
    std::size_t square_dim = 0;       // small-k: dim(C^2), exceeds 2k-1
    int dual_square_min_weight = 0;   // large-k: equals 1, below the bound 2
    std::size_t unit_position = 0;    // large-k: coordinate of the weight-1 word
    bool non_grs = false;
};
NonGrsEvidence nongrs_verdict(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);

// Coefficients g_0..g_{n-2k} with v_i^2 = u_i g(a_i) for all i and
// g_{n-2k-1} + g_{n-2k} * sigma = -1 (coefficients below index 0 are zero).
// Empty when k > n/2 or no such polynomial exists.
std::optional<std::vector<felem>> so_certificate(const EvaluationSet& S,
                                                 const std::vector<felem>& v, std::size_t k);

} // namespace ckinf
