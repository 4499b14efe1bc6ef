#include "core/json_io.hpp"

#include <string>

namespace ckinf {

namespace {

const json& member(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail_invalid(std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
    if (!j.is_number_unsigned()) fail_invalid(std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::vector<felem> as_elem_list(const json& j, const char* what) {
    if (!j.is_array()) fail_invalid(std::string(what) + " must be an array of encodings");
    std::vector<felem> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(static_cast<felem>(as_uint(x, what)));
    return out;
}

} // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail_invalid("malformed JSON input");
    return j;
}

json field_to_json(const Field& F) {
    return json{{"p", F.p}, {"m", F.m}, {"modulus", F.modulus}};
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object()) fail_invalid("field must be an object");
    auto p = static_cast<std::uint32_t>(as_uint(member(j, "p"), "p"));
    auto m = static_cast<std::uint32_t>(as_uint(member(j, "m"), "m"));
    if (auto it = j.find("modulus"); it != j.end())
        return make_field(p, m, as_elem_list(*it, "modulus"));
    return make_field(p, m);
}

json matrix_to_json(const Matrix& M) {
    return json{{"rows", M.rows}, {"cols", M.cols}, {"entries", M.a}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) fail_invalid("matrix must be an object");
    Matrix M(as_uint(member(j, "rows"), "rows"), as_uint(member(j, "cols"), "cols"));
    auto entries = as_elem_list(member(j, "entries"), "entries");
    if (entries.size() != M.rows * M.cols) fail_invalid("entries length must equal rows*cols");
    M.a = std::move(entries);
    return M;
}

json code_to_json(const LinearCode& C) {
    return json{{"field", field_to_json(*C.F)},
                {"length", C.length()},
                {"dimension", C.dim()},
                {"generator", matrix_to_json(C.G)}};
}

LinearCode code_from_json(const json& j) {
    if (!j.is_object()) fail_invalid("code must be an object");
    auto F = field_from_json(member(j, "field"));
    Matrix G = matrix_from_json(member(j, "generator"));
    if (G.rows != as_uint(member(j, "dimension"), "dimension"))
        fail_invalid("dimension does not match generator rows");
    if (G.cols != as_uint(member(j, "length"), "length"))
        fail_invalid("length does not match generator cols");
    for (felem x : G.a)
        if (x >= F->q) fail_invalid("generator entry out of field range");
    return make_code(F, std::move(G));
}

ConstructionRequest construction_from_json(const json& j) {
    if (!j.is_object()) fail_invalid("construction must be an object");
    ConstructionRequest r;
    r.F = field_from_json(member(j, "field"));
    const json& set = member(j, "set");
    if (set.is_string()) {
        std::string s = set.get<std::string>();
        felem start = 0;
        if (s == "fq") start = 0;
        else if (s == "fqstar") start = 1;
        else fail_invalid("set must be \"fq\", \"fqstar\", or an array");
        for (felem a = start; a < r.F->q; ++a) r.points.push_back(a);
    } else {
        r.points = as_elem_list(set, "set");
    }
    if (auto it = j.find("v"); it != j.end() && !(it->is_string() && *it == "ones"))
        r.v = as_elem_list(*it, "v");
    else
        r.v = ones_vector(r.points.size());
    r.k = as_uint(member(j, "k"), "k");
    if (auto it = j.find("variant"); it != j.end()) {
        if (!it->is_string()) fail_invalid("variant must be a string");
        r.variant = it->get<std::string>();
    }
    if (auto it = j.find("mu"); it != j.end()) r.mu = as_uint(*it, "mu");
    return r;
}

json construction_to_json(const ConstructionRequest& r) {
    json j{{"field", field_to_json(*r.F)},
           {"set", r.points},
           {"v", r.v},
           {"k", r.k},
           {"variant", r.variant}};
    if (r.variant == "ck_mu") j["mu"] = r.mu;
    return j;
}

LinearCode build_construction(const ConstructionRequest& r) {
    auto S = make_eval_set(r.F, r.points);
    if (r.variant == "ck") return ck_infty(S, r.v, r.k);
    if (r.variant == "ck_mu") return ck_mu(S, r.v, r.k, r.mu);
    if (r.variant == "grs") return grs(S, r.v, r.k);
    if (r.variant == "egrs") return egrs(S, r.v, r.k);
    fail_invalid("variant must be one of ck, ck_mu, grs, egrs");
}

WeightDistribution widen_counts(const std::vector<std::uint64_t>& counts) {
    return WeightDistribution(counts.begin(), counts.end());
}

json wdist_to_json(const WeightDistribution& wd) {
    json arr = json::array();
    for (const auto& c : wd) arr.push_back(c.str());
    return arr;
}

std::string wdist_poly_string(const WeightDistribution& wd) {
    std::string out;
    for (std::size_t i = 0; i < wd.size(); ++i) {
        if (wd[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += wd[i].str();
            continue;
        }
        if (wd[i] != 1) out += wd[i].str();
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace ckinf
