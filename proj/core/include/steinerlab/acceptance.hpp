#pragma once

#include <ostream>

#include "steinerlab/pipeline.hpp"

namespace steinerlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // empty when passed
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

/// Runs the release acceptance suite. `filter` is a comma-separated list of
/// criterion ids or name substrings; empty runs everything.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

/// Prints one PASS/FAIL line per criterion plus a final verdict line.
/// Returns 0 iff every selected criterion passed.
int acceptance_main(const std::string& filter, std::ostream& out);

}  // namespace steinerlab
