#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "ckinf/ckinf.h"

using njson = nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    ckinf_string_free(s);
    return out;
}

constexpr const char* kSpec94 = R"({"field":{"p":3,"m":2},"set":"fqstar","k":4})";

} // namespace

TEST_CASE("field lifecycle and arithmetic") {
    ckinf_field* f = nullptr;
    REQUIRE(ckinf_field_create(2, 4, &f) == CKINF_OK);
    uint64_t q = 0;
    uint32_t p = 0, w = 0, x = 0;
    CHECK(ckinf_field_order(f, &q) == CKINF_OK);
    CHECK(q == 16);
    CHECK(ckinf_field_characteristic(f, &p) == CKINF_OK);
    CHECK(p == 2);
    CHECK(ckinf_primitive_element(f, &w) == CKINF_OK);
    CHECK(w == 2);
    CHECK(ckinf_pow(f, w, 5, &x) == CKINF_OK);
    CHECK(x == 6);
    CHECK(ckinf_add(f, 6, 7, &x) == CKINF_OK);
    CHECK(x == 1);
    CHECK(ckinf_mul(f, 2, 8, &x) == CKINF_OK);
    CHECK(x == 3);  // x*x^3 = x^4 = x+1
    CHECK(ckinf_inv(f, 0, &x) == CKINF_EINVAL);
    CHECK(std::string(ckinf_last_error()).size() > 0);

    char* text = nullptr;
    REQUIRE(ckinf_field_to_json(f, &text) == CKINF_OK);
    std::string js = take(text);
    CHECK(js == R"({"p":2,"m":4,"modulus":[1,1,0,0,1]})");
    ckinf_field* g = nullptr;
    REQUIRE(ckinf_field_from_json(js.c_str(), &g) == CKINF_OK);
    CHECK(ckinf_primitive_element(g, &x) == CKINF_OK);
    CHECK(x == 2);
    ckinf_field_free(g);

    uint32_t* sub = nullptr;
    size_t count = 0;
    REQUIRE(ckinf_subfield_elements(f, 2, &sub, &count) == CKINF_OK);
    REQUIRE(count == 4);
    CHECK(sub[0] == 0);
    CHECK(sub[1] == 1);
    CHECK(sub[2] == 6);
    CHECK(sub[3] == 7);
    ckinf_buffer_free(sub);
    ckinf_field_free(f);
}

TEST_CASE("square roots through the interface") {
    ckinf_field* f = nullptr;
    REQUIRE(ckinf_field_create(13, 1, &f) == CKINF_OK);
    int flag = -1;
    uint32_t x = 0;
    CHECK(ckinf_is_square(f, 3, &flag) == CKINF_OK);
    CHECK(flag == 1);
    CHECK(ckinf_sqrt(f, 3, &x) == CKINF_OK);
    CHECK(x == 4);  // 4^2 = 16 = 3; canonical root is min(4, 9)
    CHECK(ckinf_is_square(f, 2, &flag) == CKINF_OK);
    CHECK(flag == 0);
    CHECK(ckinf_sqrt(f, 2, &x) == CKINF_EINVAL);
    ckinf_field_free(f);
}

TEST_CASE("construction round trips") {
    ckinf_code* c = nullptr;
    REQUIRE(ckinf_construct(kSpec94, &c) == CKINF_OK);
    size_t len = 0, dim = 0;
    CHECK(ckinf_code_length(c, &len) == CKINF_OK);
    CHECK(ckinf_code_dimension(c, &dim) == CKINF_OK);
    CHECK(len == 9);
    CHECK(dim == 4);
    char* text = nullptr;
    REQUIRE(ckinf_code_to_json(c, &text) == CKINF_OK);
    std::string js = take(text);
    ckinf_code* c2 = nullptr;
    REQUIRE(ckinf_code_from_json(js.c_str(), &c2) == CKINF_OK);
    char* text2 = nullptr;
    REQUIRE(ckinf_code_to_json(c2, &text2) == CKINF_OK);
    CHECK(take(text2) == js);
    ckinf_code_free(c2);
    ckinf_code_free(c);

    CHECK(ckinf_construct(R"({"field":{"p":5,"m":1},"set":[1,1,2],"k":3})", &c) ==
          CKINF_EINVAL);
    CHECK(ckinf_construct(R"({"field":{"p":5,"m":1},"set":[1,2,3],"k":3,"variant":"bogus"})",
                          &c) == CKINF_EINVAL);
    CHECK(ckinf_construct("{not json", &c) == CKINF_EINVAL);
    CHECK(ckinf_construct(R"({"field":{"p":3,"m":2},"set":"fqstar","k":7})", &c) ==
          CKINF_EINVAL);  // parameter window
}

TEST_CASE("classification reports") {
    char* raw = nullptr;
    REQUIRE(ckinf_classify(kSpec94, 0, 0, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["kind"] == "NMDS");
    CHECK(r["d"] == 5);
    CHECK(r["d_dual"] == 4);
    CHECK(r["method"] == "zero-sum-search");
    CHECK(r["search"]["zero_sum_free"] == false);
    CHECK(r["search"]["witness"].size() == 4);

    // Zero-sum-free instance over F_16.
    ckinf_field* f = nullptr;
    REQUIRE(ckinf_field_create(2, 4, &f) == CKINF_OK);
    std::string set;
    for (int e : {1, 3, 5, 8, 9, 11, 13}) {
        uint32_t x = 0;
        REQUIRE(ckinf_pow(f, 2, e, &x) == CKINF_OK);
        set += (set.empty() ? "" : ",") + std::to_string(x);
    }
    ckinf_field_free(f);
    std::string spec = R"({"field":{"p":2,"m":4},"set":[)" + set + R"(],"k":5})";
    REQUIRE(ckinf_classify(spec.c_str(), 0, 0, &raw) == CKINF_OK);
    auto r16 = njson::parse(take(raw));
    CHECK(r16["kind"] == "MDS");
    CHECK(r16["d"] == 4);
    CHECK(r16["search"]["zero_sum_free"] == true);
    CHECK(r16["search"]["witness"].is_null());

    // Measured path for a row-deleted variant.
    constexpr const char* mu_spec =
        R"({"field":{"p":13,"m":1},"set":[0,1,2,3,5,7,8,9,12],"v":"ones","k":4,"variant":"ck_mu","mu":1})";
    REQUIRE(ckinf_classify(mu_spec, 0, 0, &raw) == CKINF_OK);
    auto rmu = njson::parse(take(raw));
    CHECK(rmu["method"] == "measured");
    CHECK(rmu["d"] == 6);
    CHECK(rmu["d_dual"] == 1);
}

TEST_CASE("distribution reports") {
    char* raw = nullptr;
    REQUIRE(ckinf_wdist(kSpec94, "both", 0, 0, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["agreement"] == true);
    CHECK(r["kind"] == "NMDS");
    CHECK(r["formula_kind"] == "defect-one-recursion");
    CHECK(r["primal"]["enumerator"] == "1+48z^5+480z^6+1152z^7+2616z^8+2264z^9");
    CHECK(r["primal"]["counts"][5] == "48");
    CHECK(r["dual"]["counts"][4] == "48");

    REQUIRE(ckinf_wdist(kSpec94, "exhaustive", 0, 0, &raw) == CKINF_OK);
    auto re = njson::parse(take(raw));
    CHECK(re["primal"]["enumerator"] == r["primal"]["enumerator"]);

    CHECK(ckinf_wdist(kSpec94, "nonsense", 0, 0, &raw) == CKINF_EINVAL);
    CHECK(ckinf_wdist(kSpec94, "both", 100, 0, &raw) == CKINF_EBUDGET);

    // MDS instance: every 3-subset of {1..5} sums inside 6..12, never 0 mod 13.
    constexpr const char* mds_spec = R"({"field":{"p":13,"m":1},"set":[1,2,3,4,5],"k":3})";
    REQUIRE(ckinf_wdist(mds_spec, "both", 0, 0, &raw) == CKINF_OK);
    auto rm = njson::parse(take(raw));
    CHECK(rm["kind"] == "MDS");
    CHECK(rm["formula_kind"] == "classical-mds");
    CHECK(rm["agreement"] == true);

    constexpr const char* grs_spec =
        R"({"field":{"p":13,"m":1},"set":[0,1,2,3,4,5],"k":3,"variant":"grs"})";
    CHECK(ckinf_wdist(grs_spec, "formula", 0, 0, &raw) == CKINF_EINVAL);
    REQUIRE(ckinf_wdist(grs_spec, "exhaustive", 0, 0, &raw) == CKINF_OK);
    auto rg = njson::parse(take(raw));
    CHECK(rg["primal"]["counts"][0] == "1");
}

TEST_CASE("square-structure reports") {
    constexpr const char* spec =
        R"({"field":{"p":11,"m":1},"set":[0,1,2,3,4,5,6,7],"k":3})";
    char* raw = nullptr;
    REQUIRE(ckinf_schur(spec, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["structure"]["primal_case"] == "degree-doubled");
    CHECK(r["structure"]["primal_match"] == true);
    CHECK(r["structure"]["dual_case"] == "full-space");
    CHECK(r["non_grs"]["regime"] == "small-k");
    CHECK(r["non_grs"]["square_dim"] == 6);
    CHECK(r["non_grs"]["grs_square_dim_bound"] == 5);
    CHECK(r["non_grs"]["non_grs"] == true);
}

TEST_CASE("orthogonality reports") {
    constexpr const char* spec =
        R"({"field":{"p":2,"m":3},"set":[1,2,4,3,6,5],"v":[3,2,1,1,3,2],"k":3})";
    char* raw = nullptr;
    REQUIRE(ckinf_so(spec, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["ggt_zero"] == true);
    CHECK(r["certificate"] == njson::array({4}));
    CHECK(r["degree_cap"] == 0);

    constexpr const char* plain =
        R"({"field":{"p":2,"m":3},"set":[1,2,4,3,6,5],"k":3})";
    REQUIRE(ckinf_so(plain, &raw) == CKINF_OK);
    auto r2 = njson::parse(take(raw));
    CHECK(r2["ggt_zero"] == false);
    CHECK(r2["certificate"].is_null());
}

TEST_CASE("self-orthogonal construction verb") {
    constexpr const char* spec =
        R"({"field":{"p":2,"m":3},"set":[1,2,4,3,6,5],"k":3,"mode":"char2"})";
    char* raw = nullptr;
    REQUIRE(ckinf_asd(spec, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["lambda"] == 4);
    CHECK(r["v"] == njson::array({3, 2, 1, 1, 3, 2}));
    CHECK(r["gram_zero"] == true);
    CHECK(r["certificate"] == njson::array({4}));
    CHECK(r["code"]["length"] == 7);
    CHECK(r["code"]["dimension"] == 3);
    CHECK(r["classification"]["kind"] == "NMDS");

    constexpr const char* sub_spec =
        R"({"field":{"p":5,"m":4,"modulus":[2,4,4,0,1]},)"
        R"("set":[1,158,156,620,313,623,311,2,469,314],"k":5,"mode":"subfield","r":2})";
    REQUIRE(ckinf_asd(sub_spec, &raw) == CKINF_OK);
    auto r4 = njson::parse(take(raw));
    CHECK(r4["lambda"] == 314);
    CHECK(r4["v"] == njson::array({219, 159, 312, 219, 271, 315, 170, 158, 155, 327}));
    CHECK(r4["classification"]["kind"] == "NMDS");
    CHECK(r4["classification"]["d"] == 6);

    CHECK(ckinf_asd(R"({"field":{"p":2,"m":3},"set":[1,2],"k":3,"mode":"bogus"})", &raw) ==
          CKINF_EINVAL);
}

TEST_CASE("reference checks and fault injection") {
    char* raw = nullptr;
    REQUIRE(ckinf_paper_check(nullptr, &raw) == CKINF_OK);
    auto r = njson::parse(take(raw));
    CHECK(r["all_pass"] == true);
    CHECK(r["results"].size() >= 18);

    REQUIRE(ckinf_paper_check("table-I-q16", &raw) == CKINF_EASSERT);
    auto rf = njson::parse(take(raw));
    CHECK(rf["all_pass"] == false);
    bool named = false;
    for (const auto& row : rf["results"])
        if (row["name"] == "table-I q=16" && row["pass"] == false) named = true;
    CHECK(named);

    CHECK(ckinf_paper_check("no-such-fault", &raw) == CKINF_EINVAL);
}
