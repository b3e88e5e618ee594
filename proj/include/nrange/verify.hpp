#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nrange::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    double worst = 0.0;   // largest observed error for the check
    std::string detail;   // offending instance on failure
};

struct Options {
    std::uint64_t seed = 1;
    double tol = 1e-8;
};

/// prop1, prop5, prop7, prop8, prop9, prop12, prop13, prop14, prop16.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one suite, or every suite for "all".
std::vector<CheckResult> run(std::string_view suite, const Options& opt);

std::string format_table(const std::vector<CheckResult>& results);

}  // namespace nrange::verify
