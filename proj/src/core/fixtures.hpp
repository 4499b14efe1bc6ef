#pragma once

#include <string>
#include <vector>

namespace ckinf {

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Replays the bundled reference instances and reduced-scale property sweeps.
// inject_fault: "" for a normal run; "table-I-q16" perturbs one closed-form
// table entry so the harness around this battery can be exercised end to end.
std::vector<FixtureResult> run_reference_checks(const std::string& inject_fault = "");

bool all_pass(const std::vector<FixtureResult>& results);

} // namespace ckinf
