#pragma once
#include "core/code.hpp"

namespace ckinf {

// Distinct evaluation points a_1..a_n with the difference-product weights
// u_i = prod_{j != i} (a_i - a_j)^{-1} and the point sum sigma.
struct EvaluationSet {
    FieldPtr F;
    std::vector<felem> a;
    std::vector<felem> u;
    felem sigma = 0;
    std::size_t n() const { return a.size(); }
};

EvaluationSet make_eval_set(FieldPtr F, std::vector<felem> points);

// Nonzero column scalings v_i plus the dual-side weights v'_i = u_i / v_i.
struct ScalingVector {
    std::vector<felem> v, vprime;
};
ScalingVector make_scaling(const EvaluationSet& S, std::vector<felem> v);
std::vector<felem> ones_vector(std::size_t n);

// Rows v_j a_j^i for i = 0..k-1.
LinearCode grs(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);
// Length n+1: final column is (0,..,0,1)^T attached to the degree-(k-1) row.
LinearCode egrs(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);

// Rows v_j a_j^i for i in {0..k-2} plus the row v_j a_j^k; final column is
// (0,...,0,1)^T. Window: 3 <= k <= n-2 <= q-2.
LinearCode ck_infty(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);
// Same generator shape without the window check; product-span targets need
// parameters past the public window (up to 2k = n-1).
Matrix raw_ck_generator(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);
// (n-k+1) x (n+1) parity check built from v': rows v'_i a_i^t with final
// column 0 (t <= n-k-2), -1 (t = n-k-1), -sigma (t = n-k).
Matrix ck_infty_parity(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k);
// Deletes the mu-th row (exponent mu-1) from the egrs(S, v, k+1) generator.
// Accepts 1 <= mu <= k; mu = k reproduces ck_infty; mu = k+1 is rejected as
// the trivial deletion.
LinearCode ck_mu(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k,
                 std::size_t mu);

struct AsdConstruction {
    EvaluationSet S;
    std::vector<felem> v;
    felem lambda = 0;
    LinearCode code;  // [2k+1, k], self-orthogonal
};

// Characteristic 2: q = 2^m >= 8, |S| = 2k, 3 <= k <= q/2, sigma != 0;
// lambda = sigma^{-1}, v_i = (lambda u_i)^{q/2}.
AsdConstruction asd_char2(const EvaluationSet& S, std::size_t k);
// Subfield points: r | m, m/r even, |S| = 2k, 3 <= k <= p^r/2, sigma != 0,
// every a_i fixed by the r-th Frobenius power; lambda = (-sigma)^{-1},
// v_i = canonical sqrt of lambda u_i.
AsdConstruction asd_subfield(const EvaluationSet& S, std::size_t k, std::uint32_t r);

} // namespace ckinf
