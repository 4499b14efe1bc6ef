#include "core/constructions.hpp"

#include <algorithm>

namespace ckinf {

EvaluationSet make_eval_set(FieldPtr F, std::vector<felem> points) {
    require(F != nullptr, "evaluation set needs a field");
    require(!points.empty(), "evaluation set must be nonempty");
    for (felem a : points) require(a < F->q, "point outside the field");
    std::vector<felem> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "points must be distinct");

    EvaluationSet S;
    S.F = std::move(F);
    S.a = std::move(points);
    const Field& Fq = *S.F;
    S.u.resize(S.a.size());
    for (std::size_t i = 0; i < S.a.size(); ++i) {
        felem prod = 1;
        for (std::size_t j = 0; j < S.a.size(); ++j)
            if (j != i) prod = Fq.mul(prod, Fq.sub(S.a[i], S.a[j]));
        S.u[i] = Fq.inv(prod);
    }
    S.sigma = 0;
    for (felem a : S.a) S.sigma = Fq.add(S.sigma, a);
    return S;
}

ScalingVector make_scaling(const EvaluationSet& S, std::vector<felem> v) {
    require(v.size() == S.n(), "scaling vector length mismatch");
    const Field& F = *S.F;
    ScalingVector out;
    out.vprime.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(v[i] != 0 && v[i] < F.q, "scaling entries must be nonzero field elements");
        out.vprime[i] = F.mul(S.u[i], F.inv(v[i]));
    }
    out.v = std::move(v);
    return out;
}

std::vector<felem> ones_vector(std::size_t n) { return std::vector<felem>(n, 1); }

LinearCode grs(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k) {
    const std::size_t n = S.n();
    require(1 <= k && k <= n && n <= S.F->q, "k out of range");
    auto sv = make_scaling(S, v);
    const Field& F = *S.F;
    Matrix G(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            G.at(i, j) = F.mul(sv.v[j], F.pow(S.a[j], static_cast<std::int64_t>(i)));
    return make_code(S.F, std::move(G));
}

LinearCode egrs(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k) {
    const std::size_t n = S.n();
    require(1 <= k && k <= n, "k out of range");
    auto sv = make_scaling(S, v);
    const Field& F = *S.F;
    Matrix G(k, n + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            G.at(i, j) = F.mul(sv.v[j], F.pow(S.a[j], static_cast<std::int64_t>(i)));
    G.at(k - 1, n) = 1;
    return make_code(S.F, std::move(G));
}

Matrix raw_ck_generator(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k) {
    auto sv = make_scaling(S, v);
    const Field& F = *S.F;
    const std::size_t n = S.n();
    Matrix G(k, n + 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            G.at(i, j) = F.mul(sv.v[j], F.pow(S.a[j], static_cast<std::int64_t>(i)));
    for (std::size_t j = 0; j < n; ++j)
        G.at(k - 1, j) = F.mul(sv.v[j], F.pow(S.a[j], static_cast<std::int64_t>(k)));
    G.at(k - 1, n) = 1;
    return G;
}

LinearCode ck_infty(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    return make_code(S.F, raw_ck_generator(S, v, k));
}

Matrix ck_infty_parity(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    auto sv = make_scaling(S, v);
    const Field& F = *S.F;
    Matrix H(n - k + 1, n + 1);
    for (std::size_t t = 0; t <= n - k; ++t)
        for (std::size_t j = 0; j < n; ++j)
            H.at(t, j) = F.mul(sv.vprime[j], F.pow(S.a[j], static_cast<std::int64_t>(t)));
    H.at(n - k - 1, n) = F.neg(1);
    H.at(n - k, n) = F.neg(S.sigma);
    return H;
}

LinearCode ck_mu(const EvaluationSet& S, const std::vector<felem>& v, std::size_t k,
                 std::size_t mu) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    require(1 <= mu && mu <= k, "mu out of range");
    auto sv = make_scaling(S, v);
    const Field& F = *S.F;
    Matrix G(k, n + 1);
    std::size_t r = 0;
    for (std::size_t e = 0; e <= k; ++e) {
        if (e == mu - 1) continue;
        for (std::size_t j = 0; j < n; ++j)
            G.at(r, j) = F.mul(sv.v[j], F.pow(S.a[j], static_cast<std::int64_t>(e)));
        if (e == k) G.at(r, n) = 1;
        ++r;
    }
    return make_code(S.F, std::move(G));
}

AsdConstruction asd_char2(const EvaluationSet& S, std::size_t k) {
    const Field& F = *S.F;
    require(F.p == 2 && F.q >= 8, "field must have characteristic 2 and at least 8 elements");
    require(S.n() == 2 * k, "point count must equal 2k");
    require(3 <= k && 2 * k <= F.q, "k out of range");
    require(S.sigma != 0, "point sum must be nonzero");
    felem lambda = F.inv(S.sigma);
    std::vector<felem> v(S.n());
    for (std::size_t i = 0; i < S.n(); ++i)
        v[i] = F.pow(F.mul(lambda, S.u[i]), static_cast<std::int64_t>(F.q / 2));
    AsdConstruction out{S, v, lambda, ck_infty(S, v, k)};
    return out;
}

AsdConstruction asd_subfield(const EvaluationSet& S, std::size_t k, std::uint32_t r) {
    const Field& F = *S.F;
    require(r >= 1 && F.m % r == 0, "subfield degree must divide m");
    require((F.m / r) % 2 == 0, "m over r must be even");
    std::uint64_t qr = 1;
    for (std::uint32_t i = 0; i < r; ++i) qr *= F.p;
    require(S.n() == 2 * k, "point count must equal 2k");
    require(3 <= k && 2 * k <= qr, "k out of range");
    require(S.sigma != 0, "point sum must be nonzero");
    for (felem a : S.a)
        require(F.pow(a, static_cast<std::int64_t>(qr)) == a, "point outside the subfield");
    felem lambda = F.inv(F.neg(S.sigma));
    std::vector<felem> v(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) {
        auto root = F.sqrt(F.mul(lambda, S.u[i]));
        if (!root || *root == 0) fail_internal("subfield scaling is not a nonzero square");
        v[i] = *root;
    }
    AsdConstruction out{S, v, lambda, ck_infty(S, v, k)};
    return out;
}

} // namespace ckinf
