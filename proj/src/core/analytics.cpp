#include "core/analytics.hpp"

#include <algorithm>
#include <unordered_map>

namespace ckinf {

bigint binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bigint ipow(const bigint& base, std::uint64_t e) {
    bigint r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bigint exact_div(const bigint& num, const bigint& den, const std::string& what) {
    if (den == 0) fail_internal("zero divisor in " + what);
    bigint q = num / den;
    if (q * den != num) fail_assert("inexact division in " + what);
    return q;
}

namespace {

bigint subset_sum_direct(const EvaluationSet& S, std::size_t l, felem b, std::uint64_t cap) {
    const Field& F = *S.F;
    bigint total = 0;
    std::uint64_t budget_left = cap;
    for_each_subset(S.n(), l, budget_left, [&](const std::vector<std::size_t>& idx) {
        felem sum = 0;
        for (auto i : idx) sum = F.add(sum, S.a[i]);
        if (sum == b) ++total;
        return false;
    });
    return total;
}

bigint subset_sum_mitm(const EvaluationSet& S, std::size_t l, felem b) {
    const Field& F = *S.F;
    const std::size_t n = S.n(), h = n / 2;
    // left_counts[i][sum] = number of i-subsets of the first half with that sum
    std::vector<std::unordered_map<felem, std::uint64_t>> left_counts(
        std::min(l, h) + 1);
    for (std::uint64_t mask = 0; mask < (1ull << h); ++mask) {
        std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (bits > l) continue;
        felem sum = 0;
        for (std::uint64_t mm = mask; mm; mm &= mm - 1)
            sum = F.add(sum, S.a[static_cast<std::size_t>(__builtin_ctzll(mm))]);
        ++left_counts[bits][sum];
    }
    bigint total = 0;
    const std::size_t rh = n - h;
    for (std::uint64_t mask = 0; mask < (1ull << rh); ++mask) {
        std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (bits > l || l - bits > h) continue;
        felem sum = 0;
        for (std::uint64_t mm = mask; mm; mm &= mm - 1)
            sum = F.add(sum, S.a[h + static_cast<std::size_t>(__builtin_ctzll(mm))]);
        auto& bucket = left_counts[l - bits];
        auto it = bucket.find(F.sub(b, sum));
        if (it != bucket.end()) total += it->second;
    }
    return total;
}

}  // namespace

bigint subset_sum_bruteforce(const EvaluationSet& S, std::size_t l, felem b,
                             const Budgets& budgets) {
    if (l > S.n()) return 0;
    constexpr std::uint64_t direct_cap = 1ull << 20;
    bigint combos = binom(S.n(), l);
    if (combos <= std::min<std::uint64_t>(direct_cap, budgets.max_subsets))
        return subset_sum_direct(S, l, b, budgets.max_subsets);
    std::size_t bigger_half = S.n() - S.n() / 2;
    if (bigger_half < 63 && (1ull << bigger_half) <= budgets.max_subsets)
        return subset_sum_mitm(S, l, b);
    fail_budget("subset-sum enumeration budget exceeded");
}

bigint subset_sum_closed(std::uint64_t q, std::uint32_t p, std::size_t l, SumDomain domain) {
    require(p >= 2 && q >= 2 && q % p == 0, "q must be a power of p");
    std::uint64_t t = q;
    while (t % p == 0) t /= p;
    require(t == 1, "q must be a power of p");
    if (domain == SumDomain::fqstar) {
        require(l <= q - 1, "subset size exceeds domain");
        int sign = ((l + l / p) % 2 == 0) ? 1 : -1;
        bigint num = binom(q - 1, l) + sign * bigint(q - 1) * binom(q / p - 1, l / p);
        return exact_div(num, bigint(q), "punctured-domain count");
    }
    require(l <= q, "subset size exceeds domain");
    if (l % p != 0) return exact_div(binom(q, l), bigint(q), "full-domain count");
    int sign = ((l + l / p) % 2 == 0) ? 1 : -1;
    bigint num = binom(q, l) + sign * bigint(q - 1) * binom(q / p, l / p);
    return exact_div(num, bigint(q), "full-domain count");
}

ZeroSumSearch find_zero_sum_subset(const EvaluationSet& S, std::size_t k,
                                   const Budgets& budgets) {
    const Field& F = *S.F;
    ZeroSumSearch out;
    std::uint64_t budget_left = budgets.max_subsets;
    for_each_subset(S.n(), k, budget_left, [&](const std::vector<std::size_t>& idx) {
        felem sum = 0;
        for (auto i : idx) sum = F.add(sum, S.a[i]);
        if (sum != 0) return false;
        out.zero_sum_free = false;
        out.witness_indices = idx;
        for (auto i : idx) out.witness.push_back(S.a[i]);
        return true;
    });
    return out;
}

bool is_k_zero_sum_free(const EvaluationSet& S, std::size_t k, const Budgets& budgets) {
    return find_zero_sum_subset(S, k, budgets).zero_sum_free;
}

CkClassification classify_ck(const EvaluationSet& S, std::size_t k, const Budgets& budgets) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    CkClassification out;
    out.search = find_zero_sum_subset(S, k, budgets);
    if (out.search.zero_sum_free) {
        out.kind = CodeKind::MDS;
        out.d = static_cast<int>(n - k + 2);
        out.d_dual = static_cast<int>(k + 1);
    } else {
        out.kind = CodeKind::NMDS;
        out.d = static_cast<int>(n - k + 1);
        out.d_dual = static_cast<int>(k);
    }
    return out;
}

WdPair nmds_wdist_from_Amin(std::size_t N, std::size_t k, std::uint64_t q, const bigint& a_min) {
    require(k >= 1 && k < N, "dimension out of range");
    require(a_min >= 0, "seed count must be nonnegative");
    WdPair out;
    out.primal.assign(N + 1, 0);
    out.dual.assign(N + 1, 0);
    out.primal[0] = 1;
    out.dual[0] = 1;
    out.primal[N - k] = a_min;
    out.dual[k] = a_min;
    for (std::size_t s = 1; s <= k; ++s) {
        bigint acc = 0;
        for (std::size_t i = 0; i < s; ++i) {
            bigint term = binom(N - k + s, i) * (ipow(q, s - i) - 1);
            acc += (i % 2 == 0) ? term : -term;
        }
        bigint val = binom(N, k - s) * acc;
        bigint tail = binom(k, s) * a_min;
        val += (s % 2 == 0) ? tail : -tail;
        out.primal[N - k + s] = val;
    }
    for (std::size_t s = 1; s <= N - k; ++s) {
        bigint acc = 0;
        for (std::size_t i = 0; i < s; ++i) {
            bigint term = binom(k + s, i) * (ipow(q, s - i) - 1);
            acc += (i % 2 == 0) ? term : -term;
        }
        bigint val = binom(N, k + s) * acc;
        bigint tail = binom(N - k, s) * a_min;
        val += (s % 2 == 0) ? tail : -tail;
        out.dual[k + s] = val;
    }
    bigint sp = 0, sd = 0;
    for (const auto& x : out.primal) {
        if (x < 0) fail_assert("negative weight count in distribution");
        sp += x;
    }
    for (const auto& x : out.dual) {
        if (x < 0) fail_assert("negative weight count in dual distribution");
        sd += x;
    }
    if (sp != ipow(q, k) || sd != ipow(q, N - k))
        fail_assert("distribution totals do not match the code size");
    return out;
}

WeightDistribution mds_wdist(std::size_t N, std::size_t k, std::uint64_t q) {
    require(k >= 1 && k <= N, "dimension out of range");
    WeightDistribution A(N + 1, 0);
    A[0] = 1;
    const std::size_t d = N - k + 1;
    for (std::size_t w = d; w <= N; ++w) {
        bigint acc = 0;
        for (std::size_t j = 0; j <= w - d; ++j) {
            bigint term = binom(w, j) * (ipow(q, w - d + 1 - j) - 1);
            acc += (j % 2 == 0) ? term : -term;
        }
        A[w] = binom(N, w) * acc;
    }
    return A;
}

WdPair ck_wdist_formula(const EvaluationSet& S, std::size_t k, const Budgets& budgets) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    bigint count = subset_sum_bruteforce(S, k, 0, budgets);
    require(count > 0, "set is k-zero-sum free; the code is MDS");
    bigint a_min = bigint(S.F->q - 1) * count;
    return nmds_wdist_from_Amin(n + 1, k, S.F->q, a_min);
}

WdPair ck_wdist_fqstar(std::uint64_t q, std::uint32_t p, std::size_t k) {
    const std::size_t n = static_cast<std::size_t>(q - 1);
    require(3 <= k && k + 2 <= n, "parameter range violated");
    require(k != q - 2, "excluded parameters: the code is MDS");
    require(!(p == 2 && k == q - 3), "excluded parameters: the code is MDS");
    bigint a_min = bigint(q - 1) * subset_sum_closed(q, p, k, SumDomain::fqstar);
    return nmds_wdist_from_Amin(n + 1, k, q, a_min);
}

WdPair ck_wdist_fq(std::uint64_t q, std::uint32_t p, std::size_t k) {
    const std::size_t n = static_cast<std::size_t>(q);
    require(3 <= k && k + 2 <= n, "parameter range violated");
    require(!(p == 2 && k == q - 2), "excluded parameters: the code is MDS");
    bigint a_min = bigint(q - 1) * subset_sum_closed(q, p, k, SumDomain::fq);
    return nmds_wdist_from_Amin(n + 1, k, q, a_min);
}

WeightDistribution table_wdist(std::uint64_t q, std::uint32_t p, std::size_t k,
                               int corrupt_offset) {
    require(k == 5 || k == 6, "tables cover dimensions 5 and 6");
    require(q > 8, "tables require q > 8");
    std::uint64_t t = q;
    while (t % p == 0) t /= p;
    require(t == 1, "q must be a power of p");

    const bigint Q = q, P = p;
    WeightDistribution A(q + 1, 0);
    A[0] = 1;
    auto set = [&](std::size_t offset, const bigint& num, const bigint& den) {
        A[q - k + offset] = exact_div(num, den, "table entry");
    };
    const bigint q1 = Q - 1, q1sq = (Q - 1) * (Q - 1);
    if (k == 5) {
        if (p == 2) {
            set(0, q1sq * (Q - 2) * (Q - 4) * (Q - 8), 120);
            set(1, q1sq * (Q - 2) * (9 * Q - 32), 24);
            set(2, q1sq * (Q - 2) * (Q * Q - 4 * Q + 32), 12);
            set(3, q1sq * (2 * Q * Q * Q + 11 * Q * Q - 20 * Q + 64), 12);
            set(4, q1 * (9 * Q * Q * Q * Q + 9 * Q * Q * Q + 38 * Q * Q - 24 * Q + 64), 24);
            set(5, q1 * (44 * Q * Q * Q * Q + 25 * Q * Q * Q + 5 * Q * Q - 10 * Q + 56), 120);
        } else if (p == 3 || p == 5) {
            set(0, q1sq * (P * Q * Q * Q - 14 * P * Q * Q + 71 * P * Q - 154 * P + 120), 120 * P);
            set(1, q1sq * (9 * P * Q * Q - 65 * P * Q + 154 * P - 120), 24 * P);
            set(2, q1sq * (P * Q * Q * Q - 6 * P * Q * Q + 55 * P * Q - 154 * P + 120), 12 * P);
            set(3, q1sq * (2 * P * Q * Q * Q + 11 * P * Q * Q - 35 * P * Q + 154 * P - 120),
                12 * P);
            set(4,
                q1 * (9 * P * Q * Q * Q * Q + 9 * P * Q * Q * Q + 53 * P * Q * Q - 129 * P * Q +
                      120 * Q + 154 * P - 120),
                24 * P);
            set(5,
                q1 * (44 * P * Q * Q * Q * Q + 25 * P * Q * Q * Q - 10 * P * Q * Q + 95 * P * Q -
                      120 * Q - 34 * P + 120),
                120 * P);
        } else {
            set(0, q1sq * (Q - 7) * (Q * Q - 7 * Q + 22), 120);
            set(1, q1sq * (9 * Q * Q - 65 * Q + 154), 24);
            set(2, q1sq * (Q * Q * Q - 6 * Q * Q + 55 * Q - 154), 12);
            set(3, q1sq * (2 * Q * Q * Q + 11 * Q * Q - 35 * Q + 154), 12);
            set(4, q1 * (9 * Q * Q * Q * Q + 9 * Q * Q * Q + 53 * Q * Q - 129 * Q + 154), 24);
            set(5, q1 * (44 * Q * Q * Q * Q + 25 * Q * Q * Q - 10 * Q * Q + 95 * Q - 34), 120);
        }
    } else {
        const bigint Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q, Q5 = Q4 * Q;
        if (p == 2) {
            set(0, q1sq * (Q - 2) * (Q - 4) * (Q - 6) * (Q - 8), 720);
            set(1, q1sq * (Q - 2) * (Q - 4) * (11 * Q - 48), 120);
            set(2, q1sq * (Q - 2) * (Q3 - 8 * Q2 + 74 * Q - 192), 48);
            set(3, q1sq * (Q - 2) * (2 * Q3 + 15 * Q2 - 44 * Q + 192), 36);
            set(4, q1sq * (9 * Q4 + 16 * Q3 + 96 * Q2 - 160 * Q + 384), 48);
            set(5, q1 * (44 * Q5 + 71 * Q4 + 35 * Q3 + 250 * Q2 - 184 * Q + 384), 120);
            set(6, q1 * (265 * Q5 + 129 * Q4 + 100 * Q3 + 30 * Q2 - 140 * Q + 336), 720);
        } else if (p == 3) {
            set(0, q1sq * (Q - 3) * (Q - 6) * (Q2 - 11 * Q + 38), 720);
            set(1, q1sq * (Q - 3) * (11 * Q2 - 96 * Q + 228), 120);
            set(2, q1sq * (Q - 3) * (Q3 - 7 * Q2 + 84 * Q - 228), 48);
            set(3, q1sq * (2 * Q4 + 11 * Q3 - 89 * Q2 + 420 * Q - 684), 36);
            set(4, q1sq * (9 * Q4 + 16 * Q3 + 111 * Q2 - 300 * Q + 684), 48);
            set(5, q1 * (44 * Q5 + 71 * Q4 + 20 * Q3 + 405 * Q2 - 624 * Q + 684), 120);
            set(6, q1 * (265 * Q5 + 129 * Q4 + 115 * Q3 - 125 * Q2 + 300 * Q + 36), 720);
        } else if (p == 5) {
            set(0, q1sq * (Q - 5) * (Q3 - 15 * Q2 + 80 * Q - 180), 720);
            set(1, q1sq * (11 * Q3 - 129 * Q2 + 556 * Q - 900), 120);
            set(2, q1sq * (Q4 - 10 * Q3 + 105 * Q2 - 520 * Q + 900), 48);
            set(3, q1sq * (2 * Q4 + 11 * Q3 - 89 * Q2 + 460 * Q - 900), 36);
            set(4, q1sq * (9 * Q4 + 16 * Q3 + 111 * Q2 - 340 * Q + 900), 48);
            set(5, q1 * (44 * Q5 + 71 * Q4 + 20 * Q3 + 445 * Q2 - 880 * Q + 900), 120);
            set(6, q1 * (265 * Q5 + 129 * Q4 + 115 * Q3 - 165 * Q2 + 556 * Q - 180), 720);
        } else {
            set(0, q1sq * (Q4 - 20 * Q3 + 155 * Q2 - 580 * Q + 1044), 720);
            set(1, q1sq * (11 * Q3 - 129 * Q2 + 556 * Q - 1044), 120);
            set(2, q1sq * (Q4 - 10 * Q3 + 105 * Q2 - 520 * Q + 1044), 48);
            set(3, q1sq * (2 * Q4 + 11 * Q3 - 89 * Q2 + 460 * Q - 1044), 36);
            set(4, q1sq * (9 * Q4 + 16 * Q3 + 111 * Q2 - 340 * Q + 1044), 48);
            set(5, q1 * (44 * Q5 + 71 * Q4 + 20 * Q3 + 445 * Q2 - 1024 * Q + 1044), 120);
            set(6, q1 * (265 * Q5 + 129 * Q4 + 115 * Q3 - 165 * Q2 + 700 * Q - 324), 720);
        }
    }
    if (corrupt_offset >= 0) {
        require(static_cast<std::size_t>(corrupt_offset) <= k, "corrupt offset out of range");
        A[q - k + corrupt_offset] += 1;
        return A;
    }
    bigint total = 0;
    for (const auto& x : A) {
        if (x < 0) fail_assert("negative table entry");
        total += x;
    }
    if (total != ipow(q, k)) fail_assert("table total does not match the code size");
    return A;
}

SchurStructureReport schur_square_structure(const EvaluationSet& S, std::size_t k) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    const Field& F = *S.F;
    auto ones = ones_vector(n);
    auto C = ck_infty(S, ones, k);
    auto C2 = schur_product(C, C);
    SchurStructureReport rep;
    rep.primal_dim = C2.dim();
    if (2 * k < n || 2 * k == n) {
        rep.primal_case = 2 * k < n ? "degree-doubled" : "boundary-evaluation";
        rep.primal_expected_dim = 2 * k;
        Matrix target = raw_ck_generator(S, ones, 2 * k);
        rep.primal_match =
            rep.primal_dim == 2 * k && same_rowspace(F, C2.G, rowspace_basis(F, target));
    } else {
        rep.primal_case = "full-space";
        rep.primal_expected_dim = n + 1;
        rep.primal_match = rep.primal_dim == n + 1;
    }

    auto D = dual(C);
    auto D2 = schur_product(D, D);
    rep.dual_dim = D2.dim();
    if (2 * k <= n + 1) {
        rep.dual_case = "full-space";
        rep.dual_expected_dim = n + 1;
        rep.dual_match = rep.dual_dim == n + 1;
    } else {
        rep.dual_case = "unit-plus-weighted-span";
        rep.dual_expected_dim = 2 * n - 2 * k + 2;
        Matrix target(2 * n - 2 * k + 2, n + 1);
        for (std::size_t t = 0; t <= 2 * n - 2 * k; ++t)
            for (std::size_t j = 0; j < n; ++j)
                target.at(t, j) =
                    F.mul(F.mul(S.u[j], S.u[j]), F.pow(S.a[j], static_cast<std::int64_t>(t)));
        target.at(2 * n - 2 * k + 1, n) = 1;
        rep.dual_match = rep.dual_dim == rep.dual_expected_dim &&
                         same_rowspace(F, D2.G, rowspace_basis(F, target));
        std::vector<felem> unit(n + 1, 0);
        unit[n] = 1;
        rep.dual_square_min_weight = in_rowspace(F, D2.G, unit) ? 1 : 2;
    }
    return rep;
}

NonGrsEvidence nongrs_verdict(const EvaluationSet& S, const std::vector<felem>& v,
                              std::size_t k) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    const Field& F = *S.F;
    auto C = ck_infty(S, v, k);
    NonGrsEvidence ev;
    if (2 * k < n + 1) {
        ev.regime = "small-k";
        ev.square_dim = schur_product(C, C).dim();
        ev.non_grs = ev.square_dim == 2 * k;
        if (!ev.non_grs) fail_internal("product dimension contradicts the expected value");
    } else {
        ev.regime = "large-k";
        auto D2 = schur_product(dual(C), dual(C));
        ev.square_dim = D2.dim();
        ev.dual_square_min_weight = 0;
        for (std::size_t pos = n + 1; pos-- > 0;) {
            std::vector<felem> unit(n + 1, 0);
            unit[pos] = 1;
            if (in_rowspace(F, D2.G, unit)) {
                ev.dual_square_min_weight = 1;
                ev.unit_position = pos;
                break;
            }
        }
        ev.non_grs = ev.dual_square_min_weight == 1;
        if (!ev.non_grs) fail_internal("dual product contains no weight-1 word");
    }
    return ev;
}

std::optional<std::vector<felem>> so_certificate(const EvaluationSet& S,
                                                 const std::vector<felem>& v, std::size_t k) {
    const std::size_t n = S.n();
    require(3 <= k && k + 2 <= n && n <= S.F->q, "parameter range violated");
    auto sv = make_scaling(S, v);
    if (2 * k > n) return std::nullopt;
    const Field& F = *S.F;
    const std::size_t deg_cap = n - 2 * k;

    // Unique interpolant of degree <= n-1 through (a_i, v_i^2 / u_i).
    std::vector<felem> full(n + 1, 0);
    full[0] = 1;
    std::size_t deg = 0;
    for (felem a : S.a) {
        for (std::size_t i = deg + 2; i-- > 1;) full[i] = F.sub(full[i - 1], F.mul(a, full[i]));
        full[0] = F.mul(F.neg(a), full[0]);
        ++deg;
    }
    std::vector<felem> P(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // Synthetic division of the full product by (x - a_i).
        std::vector<felem> li(n, 0);
        felem carry = full[n];
        for (std::size_t j = n; j-- > 0;) {
            li[j] = carry;
            carry = F.add(full[j], F.mul(S.a[i], carry));
        }
        felem w = F.mul(F.mul(v[i], v[i]), F.inv(S.u[i]));
        felem scale = F.mul(w, S.u[i]);
        for (std::size_t j = 0; j < n; ++j) P[j] = F.add(P[j], F.mul(scale, li[j]));
    }
    for (std::size_t j = deg_cap + 1; j < n; ++j)
        if (P[j] != 0) return std::nullopt;
    std::vector<felem> g(P.begin(), P.begin() + static_cast<std::ptrdiff_t>(deg_cap + 1));
    felem low = deg_cap >= 1 ? g[deg_cap - 1] : 0;
    if (F.add(low, F.mul(g[deg_cap], S.sigma)) != F.neg(1)) return std::nullopt;
    return g;
}

} // namespace ckinf
