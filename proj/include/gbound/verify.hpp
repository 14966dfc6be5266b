#pragma once

#include <string>
#include <vector>

namespace gbound {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    std::string witness; // the values compared, for the report
};

/// Names of the desk-scale verification suites, sorted.
std::vector<std::string> verify_suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_verify_suite(const std::string& name);

std::vector<CheckResult> run_all_verify_suites();

} // namespace gbound
