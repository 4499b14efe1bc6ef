// Command-line front end for the ckinf library. Talks to the engine through
// the C interface only; JSON goes to stdout, human-readable notes and timing
// to stderr.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ckinf/ckinf.h"

namespace {

using njson = nlohmann::ordered_json;

struct ConstructionOpts {
    std::string spec_file;
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::string modulus;
    std::string set;
    std::string v = "ones";
    std::uint64_t k = 0;
    std::string variant = "ck";
    std::uint64_t mu = 0;
};

struct BudgetOpts {
    std::uint64_t max_enum = 0;     // 0 keeps the library default
    std::uint64_t max_subsets = 0;  // 0 keeps the library default
};

std::vector<std::uint32_t> parse_u32_list(const std::string& text, const std::string& what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            unsigned long val = std::stoul(tok, &used);
            if (used != tok.size() || val > 0xffffffffUL) throw std::invalid_argument(tok);
            out.push_back(static_cast<std::uint32_t>(val));
        } catch (const std::exception&) {
            throw CLI::ValidationError(what + ": \"" + tok + "\" is not a field element encoding");
        }
    }
    if (out.empty()) throw CLI::ValidationError(what + ": empty list");
    return out;
}

void add_construction_options(CLI::App* cmd, ConstructionOpts& o) {
    cmd->add_option("--spec", o.spec_file, "construction spec JSON file (overrides flags)");
    cmd->add_option("--p", o.p, "field characteristic");
    cmd->add_option("--m", o.m, "extension degree")->capture_default_str();
    cmd->add_option("--modulus", o.modulus,
                    "comma-separated modulus coefficients c0,...,cm (default: smallest-encoding "
                    "irreducible)");
    cmd->add_option("--set", o.set, "evaluation set: fq, fqstar, or comma-separated encodings");
    cmd->add_option("--v", o.v, "column scaling: ones or comma-separated encodings")
        ->capture_default_str();
    cmd->add_option("--k", o.k, "code dimension parameter");
    cmd->add_option("--variant", o.variant, "construction variant: ck, ck_mu, grs, egrs")
        ->capture_default_str();
    cmd->add_option("--mu", o.mu, "deleted-row index for ck_mu (1-based)");
}

void add_budget_options(CLI::App* cmd, BudgetOpts& b) {
    cmd->add_option("--max-enum", b.max_enum,
                    "codeword enumeration budget (q^dim cap; 0 = library default)");
    cmd->add_option("--max-subsets", b.max_subsets,
                    "subset enumeration budget (0 = library default)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

njson field_json(const ConstructionOpts& o) {
    njson f{{"p", o.p}, {"m", o.m}};
    if (!o.modulus.empty()) f["modulus"] = parse_u32_list(o.modulus, "--modulus");
    return f;
}

std::string construction_json(const ConstructionOpts& o) {
    if (!o.spec_file.empty()) return read_file(o.spec_file);
    njson j{{"field", field_json(o)}};
    if (o.set == "fq" || o.set == "fqstar")
        j["set"] = o.set;
    else
        j["set"] = parse_u32_list(o.set, "--set");
    if (o.v == "ones")
        j["v"] = "ones";
    else
        j["v"] = parse_u32_list(o.v, "--v");
    j["k"] = o.k;
    j["variant"] = o.variant;
    if (o.variant == "ck_mu") j["mu"] = o.mu;
    return j.dump();
}

std::string spec_variant(const std::string& spec) {
    njson j = njson::parse(spec, nullptr, false);
    if (j.is_object() && j.contains("variant") && j["variant"].is_string())
        return j["variant"].get<std::string>();
    return "ck";
}

int finish(int rc, char* report, const std::chrono::steady_clock::time_point& start) {
    if (report) {
        std::fputs(report, stdout);
        std::fputc('\n', stdout);
        ckinf_string_free(report);
    }
    if (rc != CKINF_OK) std::fprintf(stderr, "error: %s\n", ckinf_last_error());
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::fprintf(stderr, "elapsed: %.3f s\n", elapsed.count());
    return rc == CKINF_EINTERNAL ? 1 : rc;
}

void spill(const njson& report, std::initializer_list<const char*> keys) {
    for (const char* key : keys)
        if (report.contains(key))
            std::fprintf(stderr, "%s: %s\n", key,
                         report[key].is_string() ? report[key].get<std::string>().c_str()
                                                 : report[key].dump().c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and analysis of extended evaluation codes over finite fields"};
    app.require_subcommand(1);

    ConstructionOpts copts;
    BudgetOpts bopts;
    std::string method;
    std::string inject_fault;
    std::string asd_mode;
    std::uint32_t subfield_r = 0;

    auto* c_construct = app.add_subcommand("construct", "emit the generator matrix as JSON");
    add_construction_options(c_construct, copts);

    auto* c_classify = app.add_subcommand(
        "classify", "report the code kind (MDS/NMDS/...) and both minimum distances");
    add_construction_options(c_classify, copts);
    add_budget_options(c_classify, bopts);

    auto* c_wdist = app.add_subcommand("wdist", "compute the weight distribution");
    add_construction_options(c_wdist, copts);
    add_budget_options(c_wdist, bopts);
    c_wdist->add_option("--method", method,
                        "formula, exhaustive, or both (default: both for ck, else exhaustive)");

    auto* c_schur = app.add_subcommand(
        "schur", "square-structure report and evaluation-code exclusion evidence");
    add_construction_options(c_schur, copts);

    auto* c_so = app.add_subcommand(
        "so", "orthogonality certificate polynomial and gram-matrix test");
    add_construction_options(c_so, copts);

    auto* c_asd = app.add_subcommand("asd", "build a self-orthogonal instance");
    c_asd->add_option("--p", copts.p, "field characteristic");
    c_asd->add_option("--m", copts.m, "extension degree")->capture_default_str();
    c_asd->add_option("--modulus", copts.modulus, "comma-separated modulus coefficients");
    c_asd->add_option("--set", copts.set, "evaluation set encodings (comma-separated)");
    c_asd->add_option("--k", copts.k, "code dimension parameter");
    auto* flag_char2 = c_asd->add_flag("--char2", "characteristic-2 mode");
    c_asd->add_option("--r", subfield_r, "subfield degree for subfield mode");
    auto* flag_subfield = c_asd->add_flag("--subfield", "subfield mode (requires --r)");

    auto* c_check = app.add_subcommand("paper-check",
                                       "replay the built-in reference checks and exit nonzero "
                                       "on any mismatch");
    c_check->add_option("--inject-fault", inject_fault,
                        "perturb a named check (for harness testing), e.g. table-I-q16");

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    // Option values are validated lazily, after CLI11 has finished parsing.
    auto dispatch = [&]() -> int {
        if (c_construct->parsed()) {
            ckinf_code* code = nullptr;
            int rc = ckinf_construct(construction_json(copts).c_str(), &code);
            char* report = nullptr;
            if (rc == CKINF_OK) {
                rc = ckinf_code_to_json(code, &report);
                std::size_t n = 0, k = 0;
                ckinf_code_length(code, &n);
                ckinf_code_dimension(code, &k);
                std::fprintf(stderr, "[%zu,%zu] code constructed\n", n, k);
                ckinf_code_free(code);
            }
            return finish(rc, report, start);
        }

        if (c_classify->parsed()) {
            char* report = nullptr;
            int rc = ckinf_classify(construction_json(copts).c_str(), bopts.max_enum,
                                    bopts.max_subsets, &report);
            if (rc == CKINF_OK) spill(njson::parse(report), {"kind", "d", "d_dual", "method"});
            return finish(rc, report, start);
        }

        if (c_wdist->parsed()) {
            std::string spec = construction_json(copts);
            if (method.empty()) method = spec_variant(spec) == "ck" ? "both" : "exhaustive";
            char* report = nullptr;
            int rc = ckinf_wdist(spec.c_str(), method.c_str(), bopts.max_enum, bopts.max_subsets,
                                 &report);
            if (rc == CKINF_OK) {
                njson r = njson::parse(report);
                std::fprintf(stderr, "primal: %s\n",
                             r["primal"]["enumerator"].get<std::string>().c_str());
                if (r.contains("dual") && r["dual"].is_object())
                    std::fprintf(stderr, "dual:   %s\n",
                                 r["dual"]["enumerator"].get<std::string>().c_str());
            }
            return finish(rc, report, start);
        }

        if (c_schur->parsed()) {
            char* report = nullptr;
            int rc = ckinf_schur(construction_json(copts).c_str(), &report);
            if (rc == CKINF_OK) {
                njson r = njson::parse(report);
                std::fprintf(stderr, "primal square: %s (dim %s), dual square: %s\n",
                             r["structure"]["primal_case"].get<std::string>().c_str(),
                             r["structure"]["primal_dim"].dump().c_str(),
                             r["structure"]["dual_case"].get<std::string>().c_str());
                std::fprintf(stderr, "non-grs: %s (%s regime)\n",
                             r["non_grs"]["non_grs"].dump().c_str(),
                             r["non_grs"]["regime"].get<std::string>().c_str());
            }
            return finish(rc, report, start);
        }

        if (c_so->parsed()) {
            char* report = nullptr;
            int rc = ckinf_so(construction_json(copts).c_str(), &report);
            if (rc == CKINF_OK) spill(njson::parse(report), {"certificate", "ggt_zero"});
            return finish(rc, report, start);
        }

        if (c_asd->parsed()) {
            if (flag_char2->count() == flag_subfield->count()) {
                std::fprintf(stderr, "error: exactly one of --char2 / --subfield is required\n");
                return CKINF_EINVAL;
            }
            njson j{{"field", field_json(copts)},
                    {"set", parse_u32_list(copts.set, "--set")},
                    {"k", copts.k},
                    {"mode", flag_char2->count() ? "char2" : "subfield"}};
            if (flag_subfield->count()) j["r"] = subfield_r;
            char* report = nullptr;
            int rc = ckinf_asd(j.dump().c_str(), &report);
            if (rc == CKINF_OK) spill(njson::parse(report), {"lambda", "v"});
            return finish(rc, report, start);
        }

        // paper-check
        char* report = nullptr;
        int rc = ckinf_paper_check(inject_fault.c_str(), &report);
        if (report) {
            njson r = njson::parse(report);
            for (const auto& row : r["results"])
                std::fprintf(stderr, "%-32s %s%s%s\n", row["name"].get<std::string>().c_str(),
                             row["pass"].get<bool>() ? "PASS" : "FAIL",
                             row["pass"].get<bool>() ? "" : "  ",
                             row["pass"].get<bool>() ? "" : row["detail"].get<std::string>().c_str());
        }
        return finish(rc, report, start);
    };

    try {
        return dispatch();
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return CKINF_EINVAL;
    }
}
