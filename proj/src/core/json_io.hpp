#pragma once

#include <nlohmann/json.hpp>

#include "core/analytics.hpp"
#include "core/constructions.hpp"

namespace ckinf {

using json = nlohmann::ordered_json;

json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j);

json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const json& j);

json code_to_json(const LinearCode& C);
LinearCode code_from_json(const json& j);

// {"field":..., "set":[enc,...]|"fq"|"fqstar", "v":[enc,...]|"ones", "k":k,
//  "variant":"ck"|"ck_mu"|"grs"|"egrs", "mu":μ}. variant defaults to "ck",
// v to "ones".
struct ConstructionRequest {
    FieldPtr F;
    std::vector<felem> points;
    std::vector<felem> v;
    std::size_t k = 0;
    std::string variant = "ck";
    std::size_t mu = 0;
};

ConstructionRequest construction_from_json(const json& j);
json construction_to_json(const ConstructionRequest& r);
LinearCode build_construction(const ConstructionRequest& r);

WeightDistribution widen_counts(const std::vector<std::uint64_t>& counts);
json wdist_to_json(const WeightDistribution& wd);
std::string wdist_poly_string(const WeightDistribution& wd);

// Parses text and rethrows malformed input as an invalid-argument failure.
json parse_json_text(const std::string& text);

} // namespace ckinf
