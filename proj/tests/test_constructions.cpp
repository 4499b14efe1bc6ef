#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/constructions.hpp"

using namespace ckinf;

namespace {

std::vector<felem> sample_distinct(const Field& F, std::size_t n, std::mt19937& rng) {
    std::vector<felem> pool(F.q);
    for (std::size_t i = 0; i < F.q; ++i) pool[i] = static_cast<felem>(i);
    for (std::size_t i = pool.size() - 1; i > 0; --i)
        std::swap(pool[i], pool[rng() % (i + 1)]);
    pool.resize(n);
    return pool;
}

felem eval_poly(const Field& F, const std::vector<felem>& coeffs, felem x) {
    felem acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i]);
    return acc;
}

}  // namespace

TEST_CASE("difference-product weights over F_5") {
    auto F = make_field(5, 1);
    auto S = make_eval_set(F, {1, 2, 3});
    CHECK(S.u == std::vector<felem>{3, 4, 3});
    felem s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        s0 = F->add(s0, S.u[i]);
        s1 = F->add(s1, F->mul(S.a[i], S.u[i]));
        s2 = F->add(s2, F->mul(F->pow(S.a[i], 2), S.u[i]));
        s3 = F->add(s3, F->mul(F->pow(S.a[i], 3), S.u[i]));
    }
    CHECK(s0 == 0);
    CHECK(s1 == 0);
    CHECK(s2 == 1);
    CHECK(s3 == S.sigma);
}

TEST_CASE("weighted power sums vanish below n-1 and telescope after") {
    std::mt19937 rng(4242);
    for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
        auto F = make_field(p, m);
        for (int t = 0; t < 50; ++t) {
            std::size_t n = 3 + rng() % (std::min<std::size_t>(F->q, 10) - 2);
            auto S = make_eval_set(F, sample_distinct(*F, n, rng));
            for (std::size_t l = 0; l <= n; ++l) {
                felem sum = 0;
                for (std::size_t i = 0; i < n; ++i)
                    sum = F->add(sum, F->mul(F->pow(S.a[i], static_cast<std::int64_t>(l)), S.u[i]));
                if (l <= n - 2) CHECK(sum == 0);
                else if (l == n - 1) CHECK(sum == 1);
                else CHECK(sum == S.sigma);
            }
        }
    }
}

TEST_CASE("plain evaluation code parameters") {
    auto F = make_field(3, 2);
    std::vector<felem> all;
    for (felem a = 0; a < 9; ++a) all.push_back(a);
    auto S = make_eval_set(F, all);
    auto C = grs(S, ones_vector(9), 3);
    CHECK(C.length() == 9);
    CHECK(min_distance_exhaustive(C) == 7);
    auto cls = classify(C);
    CHECK(cls.kind == CodeKind::MDS);
    CHECK(cls.d_dual == 4);
    CHECK_THROWS_AS(grs(S, ones_vector(9), 10), ck_error);
}

TEST_CASE("extended evaluation code parameters") {
    auto F = make_field(2, 3);
    std::vector<felem> all;
    for (felem a = 0; a < 8; ++a) all.push_back(a);
    auto S = make_eval_set(F, all);
    auto C = egrs(S, ones_vector(8), 4);
    CHECK(C.length() == 9);
    CHECK(C.dim() == 4);
    CHECK(min_distance_exhaustive(C) == 6);
    CHECK(mds_by_columns(C));
    auto C8 = egrs(S, ones_vector(8), 8);
    CHECK(C8.length() == 9);
    CHECK(min_distance_exhaustive(C8) == 2);
}

TEST_CASE("infinity construction over F_16 with seven points") {
    auto F = make_field(2, 4);
    std::vector<felem> S_pts;
    for (int e : {1, 3, 5, 8, 9, 11, 13}) S_pts.push_back(F->pow(F->primitive_element, e));
    auto S = make_eval_set(F, S_pts);
    auto C = ck_infty(S, ones_vector(7), 5);
    CHECK(C.length() == 8);
    CHECK(C.dim() == 5);
    CHECK(min_distance_exhaustive(C) == 4);
    CHECK(min_distance_by_dependence(C) == 4);
    CHECK(mds_by_columns(C));
    CHECK(classify(C).kind == CodeKind::MDS);
}

TEST_CASE("infinity construction over F_9 star") {
    auto F = make_field(3, 2, {2, 2, 1});
    std::vector<felem> star;
    for (felem a = 1; a < 9; ++a) star.push_back(a);
    auto S = make_eval_set(F, star);
    auto C = ck_infty(S, ones_vector(8), 4);
    CHECK(C.length() == 9);
    CHECK(C.dim() == 4);
    CHECK(min_distance_exhaustive(C) == 5);
    auto cls = classify(C);
    CHECK(cls.kind == CodeKind::NMDS);
    CHECK(cls.d_dual == 4);
}

TEST_CASE("window validation") {
    auto F = make_field(11, 1);
    auto S = make_eval_set(F, {0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(ck_infty(S, ones_vector(6), 2), ck_error);
    CHECK_THROWS_AS(ck_infty(S, ones_vector(6), 5), ck_error);
    CHECK_NOTHROW(ck_infty(S, ones_vector(6), 4));
    CHECK_THROWS_AS(make_eval_set(F, {1, 1, 2}), ck_error);
    CHECK_THROWS_AS(make_scaling(S, {0, 1, 1, 1, 1, 1}), ck_error);
}

TEST_CASE("generator rank is k for random admissible instances") {
    auto F = make_field(11, 1);
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 5 + rng() % 6;
        auto pts = sample_distinct(*F, n, rng);
        auto S = make_eval_set(F, pts);
        std::size_t k = 3 + rng() % (n - 4);
        std::vector<felem> v(n);
        for (auto& x : v) x = 1 + rng() % (F->q - 1);
        auto C = ck_infty(S, v, k);
        CHECK(C.dim() == k);
        CHECK(rank(*F, C.G) == k);
        // Subcode of the one-larger extended evaluation code.
        auto E = egrs(S, v, k + 1);
        CHECK(rank(*F, vstack(E.G, C.G)) == E.dim());
    }
}

TEST_CASE("parity rows annihilate the generator and span the dual") {
    auto F = make_field(3, 2, {2, 2, 1});
    std::vector<felem> star;
    for (felem a = 1; a < 9; ++a) star.push_back(a);
    auto S = make_eval_set(F, star);
    std::mt19937 rng(17);
    std::vector<felem> v(8);
    for (auto& x : v) x = 1 + rng() % 8;
    auto C = ck_infty(S, v, 4);
    Matrix H = ck_infty_parity(S, v, 4);
    CHECK(H.rows == 5);
    CHECK(H.cols == 9);
    CHECK(rank(*F, H) == 5);
    CHECK(is_zero(matmul(*F, C.G, transpose(H))));
    CHECK(same_rowspace(*F, H, dual(C).G));

    auto sv = make_scaling(S, v);
    const std::size_t n = 8, k = 4;
    for (int t = 0; t < 25; ++t) {
        std::vector<felem> g(n - k + 1);
        for (auto& c : g) c = rng() % F->q;
        std::vector<felem> w(n + 1);
        for (std::size_t i = 0; i < n; ++i) w[i] = F->mul(sv.vprime[i], eval_poly(*F, g, S.a[i]));
        w[n] = F->neg(F->add(g[n - k - 1], F->mul(g[n - k], S.sigma)));
        CHECK(in_rowspace(*F, H, w));
    }
}

TEST_CASE("row-deleted variants over F_13") {
    auto F = make_field(13, 1);
    auto S = make_eval_set(F, {0, 1, 2, 3, 5, 7, 8, 9, 12});
    auto ones = ones_vector(9);
    auto base = ck_infty(S, ones, 4);

    auto cls1 = classify(ck_mu(S, ones, 4, 1));
    CHECK(cls1.d == 6);
    CHECK(cls1.d_dual == 1);

    auto C2 = ck_mu(S, ones, 4, 2);
    CHECK(weight_distribution_exhaustive(C2) == weight_distribution_exhaustive(base));
    auto cls2 = classify(C2);
    CHECK(cls2.d == 6);
    CHECK(cls2.d_dual == 4);

    auto cls3 = classify(ck_mu(S, ones, 4, 3));
    CHECK(cls3.d == 6);
    CHECK(cls3.d_dual == 3);

    CHECK(ck_mu(S, ones, 4, 4).G == base.G);
    CHECK_THROWS_AS(ck_mu(S, ones, 4, 5), ck_error);
    CHECK_THROWS_AS(ck_mu(S, ones, 4, 0), ck_error);
}

TEST_CASE("row-deleted variants over F_17") {
    auto F = make_field(17, 1);
    std::vector<felem> pts;
    for (felem a = 0; a < 17; ++a)
        if (a != 8 && a != 16) pts.push_back(a);
    auto S = make_eval_set(F, pts);
    auto ones = ones_vector(15);
    int expected_dual[] = {1, 5, 4, 4};
    for (std::size_t mu = 1; mu <= 4; ++mu) {
        auto C = ck_mu(S, ones, 5, mu);
        CHECK(C.length() == 16);
        CHECK(C.dim() == 5);
        auto D = dual(C);
        CHECK(D.dim() == 11);
        CHECK(min_distance_by_dependence(D) == expected_dual[mu - 1]);
    }
}

TEST_CASE("characteristic-2 self-orthogonal instance over F_8") {
    auto F = make_field(2, 3);
    std::vector<felem> pts;
    for (int e : {0, 1, 2, 3, 4, 6}) pts.push_back(F->pow(F->primitive_element, e));
    CHECK(pts == std::vector<felem>{1, 2, 4, 3, 6, 5});
    auto S = make_eval_set(F, pts);
    auto A = asd_char2(S, 3);
    CHECK(A.lambda == 4);
    CHECK(A.v == std::vector<felem>{3, 2, 1, 1, 3, 2});
    CHECK(A.code.length() == 7);
    CHECK(A.code.dim() == 3);
    CHECK(is_zero(matmul(*F, A.code.G, transpose(A.code.G))));
    // Self-orthogonal: every generator row lies in the dual.
    auto D = dual(A.code);
    CHECK(rank(*F, vstack(D.G, A.code.G)) == D.dim());
    auto cls = classify(A.code);
    CHECK(cls.kind == CodeKind::NMDS);
    CHECK(cls.d == 4);
    CHECK(weight_distribution_exhaustive(A.code) ==
          std::vector<std::uint64_t>{1, 0, 0, 0, 28, 63, 231, 189});
}

TEST_CASE("characteristic-2 preconditions") {
    auto F = make_field(2, 3);
    // {1, w, w^2, w^4} sums to zero in F_8 (trace-like cancellation).
    auto bad = make_eval_set(F, {1, 2, 4, 7});
    if (bad.sigma == 0) CHECK_THROWS_AS(asd_char2(bad, 2), ck_error);
    CHECK_THROWS_AS(asd_char2(make_eval_set(F, {1, 2, 4, 3, 6}), 3), ck_error);   // odd size
    CHECK_THROWS_AS(asd_char2(make_eval_set(F, {1, 2, 4, 3}), 2), ck_error);      // k < 3
    auto F5 = make_field(5, 1);
    CHECK_THROWS_AS(asd_char2(make_eval_set(F5, {1, 2, 3, 4}), 2), ck_error);     // odd char
}

TEST_CASE("subfield self-orthogonal instance over F_625") {
    auto F = make_field(5, 4, {2, 4, 4, 0, 1});
    felem w = 5;
    std::vector<felem> pts{1,
                           F->pow(w, 26),
                           F->pow(w, 52),
                           F->pow(w, 78),
                           F->pow(w, 104),
                           F->pow(w, 130),
                           F->pow(w, 182),
                           2,
                           F->pow(w, 494),
                           F->pow(w, 598)};
    CHECK(pts == std::vector<felem>{1, 158, 156, 620, 313, 623, 311, 2, 469, 314});
    auto S = make_eval_set(F, pts);
    CHECK(S.sigma == F->pow(w, 338));
    auto A = asd_subfield(S, 5, 2);
    CHECK(A.lambda == F->pow(w, 598));
    CHECK(A.v == std::vector<felem>{219, 159, 312, 219, 271, 315, 170, 158, 155, 327});
    CHECK(A.code.length() == 11);
    CHECK(A.code.dim() == 5);
    CHECK(is_zero(matmul(*F, A.code.G, transpose(A.code.G))));
    auto D = dual(A.code);
    CHECK(rank(*F, vstack(D.G, A.code.G)) == D.dim());
    CHECK(min_distance_by_dependence(A.code) == 6);
    CHECK(min_distance_by_dependence(D) == 5);

    // Listed alternative roots are valid coordinatewise: same squares.
    std::vector<felem> listed{219, 621, 312, 219, 384, 315, 605, 158, 155, 327};
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(F->mul(listed[i], listed[i]) == F->mul(A.lambda, S.u[i]));
        CHECK((A.v[i] == listed[i] || A.v[i] == F->neg(listed[i])));
        CHECK(A.v[i] == std::min(listed[i], F->neg(listed[i])));
    }
}

TEST_CASE("subfield preconditions") {
    auto F = make_field(5, 4, {2, 4, 4, 0, 1});
    auto sub = F->subfield_elements(2);
    std::vector<felem> pts(sub.begin() + 1, sub.begin() + 7);
    auto S = make_eval_set(F, pts);
    CHECK_THROWS_AS(asd_subfield(S, 3, 4), ck_error);  // m/r odd
    CHECK_THROWS_AS(asd_subfield(S, 3, 3), ck_error);  // r does not divide m
    std::vector<felem> outside = pts;
    outside[0] = 5;  // primitive element is not in F_25
    if (F->pow(5, 25) != 5) CHECK_THROWS_AS(asd_subfield(make_eval_set(F, outside), 3, 2), ck_error);
}
