#pragma once

#include <string>
#include <vector>

namespace tangles {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    // Identifiers of the individual reference cells that did not match,
    // e.g. "c@g12" or "gamma_c@tau2".
    std::vector<std::string> mismatches;
    double seconds = 0;
};

struct AcceptanceOptions {
    int threads = 1;
    int oracle_order = 5;
    // Coefficients of G in b0 used for the singularity estimates.
    int b0_coefficients = 25;
};

// Runs the eight acceptance criteria in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

std::string format_result(const CriterionResult& r);

} // namespace tangles
