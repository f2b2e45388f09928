#pragma once

#include "tangles/rational.hpp"

#include <string>
#include <vector>

namespace tangles {

struct ReferenceConstant {
    std::string label;
    std::string closed_form;
    Real value;
};

// The four growth constants quoted for comparison: the oriented census with
// and without flypes, and the n = 1 census with and without flypes.
std::vector<ReferenceConstant> reference_constants();

struct GrowthEstimate {
    Real rate;        // extrapolated 1/g
    Real error_bar;   // max - min of the last three extrapolants
    Real exponent;
    bool log_correction = false;
    std::vector<Real> ratios;        // gamma_p / gamma_{p-1}, length = input - 1
    std::vector<Real> corrected;     // ratios divided by the model ratio
    std::vector<Real> extrapolants;  // linear extrapolation in 1/p
    std::vector<ReferenceConstant> references;
};

// coeffs[i] is gamma_{first_index + i}. Models gamma_p ~ C mu^p p^exponent
// (log p)^{-1 if log_correction}.
GrowthEstimate growth_fit(const std::vector<Rational>& coeffs, const Real& exponent, bool log_correction,
                          int first_index = 1);

struct LinkEstimate {
    int p;
    Rational f_p;
};

// f_p ~ gamma_{p-1} / p for p = 2 .. P + 1; heuristic (assumes links have
// low symmetry).
std::vector<LinkEstimate> link_count_estimate(const std::vector<Rational>& gamma_b, int first_index = 1);

struct SingularityEstimate {
    Real radius;                // estimated positive-axis singularity
    bool negative_dominant;     // coefficients alternate in sign at the tail
    Real negative_radius;       // distance to the negative-axis singularity, if dominant
    std::vector<Real> extrapolants;
};

// Positive-axis singularity of sum_{k>=1} a_k z^k from its tail. When the
// tail alternates, the dominant singularity at -R is estimated first and
// pushed to infinity by z = w/(1 - w/R) before the ratio analysis.
SingularityEstimate singularity_estimate(const std::vector<Real>& coeffs);

} // namespace tangles
