#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/code.hpp"

using namespace ckinf;

namespace {

LinearCode random_code(FieldPtr F, std::size_t n, std::size_t k, std::mt19937& rng) {
    while (true) {
        Matrix G(k, n);
        for (auto& x : G.a) x = rng() % F->q;
        if (rank(*F, G) == k) return make_code(F, std::move(G));
    }
}

LinearCode rs_code(FieldPtr F, const std::vector<felem>& pts, std::size_t k) {
    Matrix G(k, pts.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            G.at(i, j) = F->pow(pts[j], static_cast<std::int64_t>(i));
    return make_code(F, std::move(G));
}

}  // namespace

TEST_CASE("binary [7,4] code weight distribution and class") {
    auto F = make_field(2, 1);
    Matrix G(4, 7);
    G.a = {1, 0, 0, 0, 0, 1, 1,
           0, 1, 0, 0, 1, 0, 1,
           0, 0, 1, 0, 1, 1, 0,
           0, 0, 0, 1, 1, 1, 1};
    auto C = make_code(F, G);
    auto wd = weight_distribution_exhaustive(C);
    CHECK(wd == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    CHECK(min_distance_exhaustive(C) == 3);
    CHECK(min_distance_by_dependence(C) == 3);
    auto D = dual(C);
    CHECK(D.dim() == 3);
    CHECK(weight_distribution_exhaustive(D) == std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0});
    auto cls = classify(C);
    CHECK(cls.kind == CodeKind::NMDS);
    CHECK(cls.d == 3);
    CHECK(cls.d_dual == 4);
}

TEST_CASE("polynomial evaluation code is MDS") {
    auto F = make_field(5, 1);
    auto C = rs_code(F, {1, 2, 3, 4}, 2);
    CHECK(min_distance_exhaustive(C) == 3);
    CHECK(mds_by_columns(C));
    auto cls = classify(C);
    CHECK(cls.kind == CodeKind::MDS);
    auto F2 = make_field(2, 1);
    Matrix G(4, 7);
    G.a = {1, 0, 0, 0, 0, 1, 1,
           0, 1, 0, 0, 1, 0, 1,
           0, 0, 1, 0, 1, 1, 0,
           0, 0, 0, 1, 1, 1, 1};
    CHECK_FALSE(mds_by_columns(make_code(F2, G)));
}

TEST_CASE("dual is an involution and annihilates the generator") {
    std::mt19937 rng(2024);
    for (auto [p, m] : {std::pair{5u, 1u}, {2u, 3u}, {3u, 2u}}) {
        auto F = make_field(p, m);
        for (int t = 0; t < 20; ++t) {
            auto C = random_code(F, 8, 3, rng);
            auto D = dual(C);
            CHECK(D.dim() == 5);
            CHECK(is_zero(matmul(*F, C.G, transpose(D.G))));
            CHECK(same_rowspace(*F, dual(D).G, C.G));
        }
    }
}

TEST_CASE("distance methods agree on random codes") {
    std::mt19937 rng(555);
    for (auto [p, m] : {std::pair{5u, 1u}, {2u, 3u}, {7u, 1u}}) {
        auto F = make_field(p, m);
        for (int t = 0; t < 25; ++t) {
            std::size_t n = 5 + rng() % 5;
            std::size_t k = 2 + rng() % (n - 3);
            auto C = random_code(F, n, k, rng);
            if (dual(C).dim() == 0) continue;
            CHECK(min_distance_exhaustive(C) == min_distance_by_dependence(C));
        }
    }
}

TEST_CASE("componentwise product spans expected spaces") {
    auto F = make_field(11, 1);
    auto C2 = rs_code(F, {1, 2, 3, 4, 5, 6, 7}, 2);
    auto sq = schur_product(C2, C2);
    CHECK(sq.dim() == 3);
    CHECK(same_rowspace(*F, sq.G, rs_code(F, {1, 2, 3, 4, 5, 6, 7}, 3).G));

    Matrix ones(1, 5);
    for (auto& x : ones.a) x = 1;
    auto R = make_code(F, ones);
    auto rsq = schur_product(R, R);
    CHECK(rsq.dim() == 1);
    CHECK(same_rowspace(*F, rsq.G, R.G));
}

TEST_CASE("enumeration budget is enforced") {
    auto F = make_field(5, 1);
    std::mt19937 rng(1);
    auto C = random_code(F, 8, 4, rng);
    Budgets tiny;
    tiny.max_enum = 100;  // 5^4 = 625 > 100
    CHECK_THROWS_AS(weight_distribution_exhaustive(C, tiny), ck_error);
    Budgets tiny2;
    tiny2.max_subsets = 3;
    CHECK_THROWS_AS(min_distance_by_dependence(C, tiny2), ck_error);
    try {
        min_distance_by_dependence(C, tiny2);
    } catch (const ck_error& e) {
        CHECK(e.code == errc::budget);
    }
}

TEST_CASE("classification labels cover the taxonomy") {
    // Evaluation code on {1..6} over F_7 with the first column duplicated:
    // d stays 4 = N-K, the duplicate pair gives dual distance 2 != 3.
    auto F = make_field(7, 1);
    Matrix G(3, 7);
    std::vector<felem> pts{1, 1, 2, 3, 4, 5, 6};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 7; ++j) G.at(i, j) = F->pow(pts[j], static_cast<std::int64_t>(i));
    auto cls = classify(make_code(F, G));
    CHECK(cls.kind == CodeKind::AMDSOnly);
    CHECK(cls.d == 4);
    CHECK(cls.d_dual == 2);

    auto F2bin = make_field(2, 1);
    Matrix G2(2, 6);
    G2.a = {1, 0, 1, 1, 0, 0,
            0, 1, 1, 0, 0, 0};
    auto cls2 = classify(make_code(F2bin, G2));  // d = 2 < N-K = 4, dual d = 1
    CHECK(cls2.kind == CodeKind::Other);
}

TEST_CASE("generators must have full rank") {
    auto F = make_field(3, 1);
    Matrix G(2, 3);
    G.a = {1, 2, 0, 2, 1, 0};
    CHECK_THROWS_AS(make_code(F, G), ck_error);
}
