#include "ckinf/ckinf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/fixtures.hpp"
#include "core/json_io.hpp"

using namespace ckinf;

struct ckinf_field {
    FieldPtr F;
};

struct ckinf_code {
    LinearCode C;
};

namespace {

thread_local std::string g_last_error = "ok";

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

int status_of(const ck_error& e) { return static_cast<int>(e.code); }

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return CKINF_OK;
    } catch (const ck_error& e) {
        return set_error(status_of(e), e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(CKINF_EINVAL, e.what());
    } catch (const std::exception& e) {
        return set_error(CKINF_EINTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) std::abort();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out) { *out = dup_string(j.dump()); }

const Field& deref(const ckinf_field* f) {
    if (!f) fail_invalid("null field handle");
    return *f->F;
}

Budgets budgets_from(std::uint64_t max_enum, std::uint64_t max_subsets) {
    Budgets b;
    if (max_enum) b.max_enum = max_enum;
    if (max_subsets) b.max_subsets = max_subsets;
    return b;
}

ConstructionRequest parse_request(const char* text) {
    if (!text) fail_invalid("null construction spec");
    return construction_from_json(parse_json_text(text));
}

// The analysis verbs interpret the spec as an evaluation-set instance, which
// only the undeleted family supports directly.
void require_ck(const ConstructionRequest& r, const char* verb) {
    if (r.variant != "ck")
        fail_invalid(std::string(verb) + " requires variant \"ck\"; got \"" + r.variant + "\"");
}

json search_to_json(const ZeroSumSearch& s) {
    json j{{"zero_sum_free", s.zero_sum_free}};
    if (s.zero_sum_free) {
        j["witness"] = nullptr;
        j["witness_indices"] = nullptr;
    } else {
        j["witness"] = s.witness;
        j["witness_indices"] = s.witness_indices;
    }
    return j;
}

json side_to_json(const WeightDistribution& wd) {
    return json{{"counts", wdist_to_json(wd)}, {"enumerator", wdist_poly_string(wd)}};
}

} // namespace

extern "C" {

const char* ckinf_last_error(void) { return g_last_error.c_str(); }

void ckinf_string_free(char* s) { std::free(s); }
void ckinf_buffer_free(void* p) { std::free(p); }

int ckinf_field_create(uint32_t p, uint32_t m, ckinf_field** out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = new ckinf_field{make_field(p, m)};
    });
}

int ckinf_field_create_with_modulus(uint32_t p, uint32_t m, const uint32_t* modulus,
                                    size_t modulus_len, ckinf_field** out) {
    return guarded([&] {
        if (!out || !modulus) fail_invalid("null out or modulus parameter");
        *out = new ckinf_field{make_field(p, m, {modulus, modulus + modulus_len})};
    });
}

int ckinf_field_from_json(const char* text, ckinf_field** out) {
    return guarded([&] {
        if (!out || !text) fail_invalid("null out or text parameter");
        *out = new ckinf_field{field_from_json(parse_json_text(text))};
    });
}

int ckinf_field_to_json(const ckinf_field* f, char** out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        emit(field_to_json(deref(f)), out);
    });
}

void ckinf_field_free(ckinf_field* f) { delete f; }

int ckinf_field_order(const ckinf_field* f, uint64_t* q) {
    return guarded([&] {
        if (!q) fail_invalid("null out parameter");
        *q = deref(f).q;
    });
}

int ckinf_field_characteristic(const ckinf_field* f, uint32_t* p) {
    return guarded([&] {
        if (!p) fail_invalid("null out parameter");
        *p = deref(f).p;
    });
}

int ckinf_primitive_element(const ckinf_field* f, uint32_t* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = deref(f).primitive_element;
    });
}

#define CKINF_BINOP(name, expr)                                              \
    int name(const ckinf_field* f, uint32_t a, uint32_t b, uint32_t* out) {  \
        return guarded([&] {                                                 \
            if (!out) fail_invalid("null out parameter");                    \
            const Field& F = deref(f);                                       \
            *out = (expr);                                                   \
        });                                                                  \
    }

CKINF_BINOP(ckinf_add, F.add(a, b))
CKINF_BINOP(ckinf_sub, F.sub(a, b))
CKINF_BINOP(ckinf_mul, F.mul(a, b))
#undef CKINF_BINOP

int ckinf_neg(const ckinf_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = deref(f).neg(a);
    });
}

int ckinf_inv(const ckinf_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = deref(f).inv(a);
    });
}

int ckinf_pow(const ckinf_field* f, uint32_t a, int64_t e, uint32_t* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = deref(f).pow(a, e);
    });
}

int ckinf_is_square(const ckinf_field* f, uint32_t a, int* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = deref(f).is_square(a) ? 1 : 0;
    });
}

int ckinf_sqrt(const ckinf_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        auto r = deref(f).sqrt(a);
        if (!r) fail_invalid("element is not a square");
        *out = *r;
    });
}

int ckinf_subfield_elements(const ckinf_field* f, uint32_t r, uint32_t** out, size_t* count) {
    return guarded([&] {
        if (!out || !count) fail_invalid("null out parameter");
        auto elems = deref(f).subfield_elements(r);
        auto* buf = static_cast<uint32_t*>(std::malloc(elems.size() * sizeof(uint32_t)));
        if (!buf) std::abort();
        std::memcpy(buf, elems.data(), elems.size() * sizeof(uint32_t));
        *out = buf;
        *count = elems.size();
    });
}

int ckinf_construct(const char* construction_json, ckinf_code** out) {
    return guarded([&] {
        if (!out) fail_invalid("null out parameter");
        *out = new ckinf_code{build_construction(parse_request(construction_json))};
    });
}

int ckinf_code_from_json(const char* text, ckinf_code** out) {
    return guarded([&] {
        if (!out || !text) fail_invalid("null out or text parameter");
        *out = new ckinf_code{code_from_json(parse_json_text(text))};
    });
}

int ckinf_code_to_json(const ckinf_code* c, char** out) {
    return guarded([&] {
        if (!c || !out) fail_invalid("null code or out parameter");
        emit(code_to_json(c->C), out);
    });
}

int ckinf_code_length(const ckinf_code* c, size_t* out) {
    return guarded([&] {
        if (!c || !out) fail_invalid("null code or out parameter");
        *out = c->C.length();
    });
}

int ckinf_code_dimension(const ckinf_code* c, size_t* out) {
    return guarded([&] {
        if (!c || !out) fail_invalid("null code or out parameter");
        *out = c->C.dim();
    });
}

void ckinf_code_free(ckinf_code* c) { delete c; }

int ckinf_classify(const char* construction_json, uint64_t max_enum, uint64_t max_subsets,
                   char** report) {
    return guarded([&] {
        if (!report) fail_invalid("null report parameter");
        auto r = parse_request(construction_json);
        Budgets b = budgets_from(max_enum, max_subsets);
        json out{{"input", construction_to_json(r)}};
        if (r.variant == "ck") {
            auto S = make_eval_set(r.F, r.points);
            auto cls = classify_ck(S, r.k, b);
            out["length"] = S.n() + 1;
            out["dimension"] = r.k;
            out["kind"] = to_string(cls.kind);
            out["d"] = cls.d;
            out["d_dual"] = cls.d_dual;
            out["method"] = "zero-sum-search";
            out["search"] = search_to_json(cls.search);
        } else {
            auto C = build_construction(r);
            auto cls = classify(C, b);
            out["length"] = C.length();
            out["dimension"] = C.dim();
            out["kind"] = to_string(cls.kind);
            out["d"] = cls.d;
            out["d_dual"] = cls.d_dual;
            out["method"] = "measured";
            out["method_d"] = cls.method_d;
            out["method_dual"] = cls.method_dual;
        }
        emit(out, report);
    });
}

int ckinf_wdist(const char* construction_json, const char* method, uint64_t max_enum,
                uint64_t max_subsets, char** report) {
    return guarded([&] {
        if (!report) fail_invalid("null report parameter");
        std::string mode = method ? method : "both";
        if (mode != "formula" && mode != "exhaustive" && mode != "both")
            fail_invalid("method must be formula, exhaustive, or both");
        auto r = parse_request(construction_json);
        Budgets b = budgets_from(max_enum, max_subsets);
        json out{{"input", construction_to_json(r)}, {"method", mode}};
        json notes = json::array();

        WeightDistribution f_primal, f_dual;
        bool have_formula = false;
        if (mode != "exhaustive") {
            require_ck(r, "the formula method");
            auto S = make_eval_set(r.F, r.points);
            auto cls = classify_ck(S, r.k, b);
            out["kind"] = to_string(cls.kind);
            if (cls.kind == CodeKind::MDS) {
                f_primal = mds_wdist(S.n() + 1, r.k, r.F->q);
                f_dual = mds_wdist(S.n() + 1, S.n() + 1 - r.k, r.F->q);
                out["formula_kind"] = "classical-mds";
            } else {
                auto wd = ck_wdist_formula(S, r.k, b);
                f_primal = std::move(wd.primal);
                f_dual = std::move(wd.dual);
                out["formula_kind"] = "defect-one-recursion";
            }
            have_formula = true;
        }

        auto C = build_construction(r);
        out["length"] = C.length();
        out["dimension"] = C.dim();
        WeightDistribution e_primal, e_dual;
        bool have_primal = false, have_dual = false;
        if (mode != "formula") {
            if (!enumeration_fits(*C.F, C.dim(), b.max_enum))
                fail_budget("enumeration budget exceeded for the primal code (max-enum)");
            e_primal = widen_counts(weight_distribution_exhaustive(C));
            have_primal = true;
            if (enumeration_fits(*C.F, C.length() - C.dim(), b.max_enum)) {
                e_dual = widen_counts(weight_distribution_exhaustive(dual(C)));
                have_dual = true;
            } else {
                notes.push_back("dual enumeration skipped: budget (max-enum)");
            }
        }

        if (mode == "both") {
            bool agree = f_primal == e_primal && (!have_dual || f_dual == e_dual);
            out["agreement"] = agree;
            if (!agree)
                fail_assert("formula and exhaustive distributions disagree; formula primal " +
                            wdist_poly_string(f_primal) + " vs exhaustive " +
                            wdist_poly_string(e_primal));
        }

        const WeightDistribution& primal = have_formula ? f_primal : e_primal;
        out["primal"] = side_to_json(primal);
        if (have_formula)
            out["dual"] = side_to_json(f_dual);
        else if (have_dual)
            out["dual"] = side_to_json(e_dual);
        else
            out["dual"] = nullptr;
        out["budget_notes"] = notes;
        emit(out, report);
    });
}

int ckinf_schur(const char* construction_json, char** report) {
    return guarded([&] {
        if (!report) fail_invalid("null report parameter");
        auto r = parse_request(construction_json);
        require_ck(r, "square-structure analysis");
        auto S = make_eval_set(r.F, r.points);
        auto st = schur_square_structure(S, r.k);
        auto ev = nongrs_verdict(S, r.v, r.k);
        json structure{{"scaling", "ones"},
                       {"primal_case", st.primal_case},
                       {"primal_dim", st.primal_dim},
                       {"primal_expected_dim", st.primal_expected_dim},
                       {"primal_match", st.primal_match},
                       {"dual_case", st.dual_case},
                       {"dual_dim", st.dual_dim},
                       {"dual_expected_dim", st.dual_expected_dim},
                       {"dual_match", st.dual_match}};
        structure["dual_square_min_weight"] =
            st.dual_square_min_weight ? json(st.dual_square_min_weight) : json();
        json evidence{{"regime", ev.regime}, {"non_grs", ev.non_grs}};
        if (ev.regime == "small-k") {
            evidence["square_dim"] = ev.square_dim;
            evidence["grs_square_dim_bound"] = 2 * r.k - 1;
        } else {
            evidence["dual_square_min_weight"] = ev.dual_square_min_weight;
            evidence["unit_position"] = ev.unit_position;
        }
        emit(json{{"input", construction_to_json(r)},
                  {"method", "rank-measurement"},
                  {"structure", structure},
                  {"non_grs", evidence}},
             report);
    });
}

int ckinf_so(const char* construction_json, char** report) {
    return guarded([&] {
        if (!report) fail_invalid("null report parameter");
        auto r = parse_request(construction_json);
        require_ck(r, "orthogonality analysis");
        auto S = make_eval_set(r.F, r.points);
        auto cert = so_certificate(S, r.v, r.k);
        auto C = ck_infty(S, r.v, r.k);
        bool ggt_zero = is_zero(matmul(*r.F, C.G, transpose(C.G)));
        if (cert.has_value() != ggt_zero)
            fail_internal("certificate and gram-matrix test disagree");
        json out{{"input", construction_to_json(r)},
                 {"certificate", cert ? json(*cert) : json()},
                 {"ggt_zero", ggt_zero}};
        out["degree_cap"] =
            2 * r.k > S.n() ? json() : json(S.n() - 2 * r.k);
        emit(out, report);
    });
}

int ckinf_asd(const char* asd_json, char** report) {
    return guarded([&] {
        if (!report) fail_invalid("null report parameter");
        if (!asd_json) fail_invalid("null spec");
        json j = parse_json_text(asd_json);
        if (!j.is_object()) fail_invalid("spec must be an object");
        if (!j.contains("field") || !j.contains("set") || !j.contains("k") || !j.contains("mode"))
            fail_invalid("spec requires field, set, k, mode");
        auto F = field_from_json(j["field"]);
        if (!j["set"].is_array()) fail_invalid("set must be an array of encodings");
        std::vector<felem> pts;
        for (const auto& x : j["set"]) pts.push_back(x.get<felem>());
        auto S = make_eval_set(F, pts);
        std::size_t k = j["k"].get<std::size_t>();
        std::string mode = j["mode"].get<std::string>();
        AsdConstruction A = [&] {
            if (mode == "char2") return asd_char2(S, k);
            if (mode == "subfield") {
                if (!j.contains("r")) fail_invalid("subfield mode requires r");
                return asd_subfield(S, k, j["r"].get<std::uint32_t>());
            }
            fail_invalid("mode must be char2 or subfield");
        }();
        if (!is_zero(matmul(*F, A.code.G, transpose(A.code.G))))
            fail_internal("constructed code is not orthogonal to itself");
        auto cert = so_certificate(S, A.v, k);
        json out{{"input", j},
                 {"mode", mode},
                 {"lambda", A.lambda},
                 {"v", A.v},
                 {"code", code_to_json(A.code)},
                 {"gram_zero", true},
                 {"certificate", cert ? json(*cert) : json()}};
        try {
            auto cls = classify_ck(S, k);
            out["classification"] = json{{"kind", to_string(cls.kind)},
                                         {"d", cls.d},
                                         {"d_dual", cls.d_dual},
                                         {"method", "zero-sum-search"}};
        } catch (const ck_error& e) {
            if (e.code != errc::budget) throw;
            out["classification"] = nullptr;
        }
        emit(out, report);
    });
}

int ckinf_paper_check(const char* inject_fault, char** report) {
    bool ok = false;
    int rc = guarded([&] {
        if (!report) fail_invalid("null report parameter");
        auto results = run_reference_checks(inject_fault ? inject_fault : "");
        ok = all_pass(results);
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit(json{{"all_pass", ok}, {"results", arr}}, report);
    });
    if (rc != CKINF_OK) return rc;
    if (!ok) return set_error(CKINF_EASSERT, "reference checks failed");
    return CKINF_OK;
}

} // extern "C"
