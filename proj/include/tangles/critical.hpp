#pragma once

#include "tangles/rational.hpp"

#include <optional>
#include <string>
#include <utility>

namespace tangles {

// Values on the critical line b0 = b0*(theta) of the n = 2 bare model.
struct CriticalObservables {
    Real theta;
    Real x, s;  // cos theta, sin theta
    Real b0, G, F, H;
    Real b, c;
    Real gamma_b, gamma_c;
    Real dprime_b, dprime_c;
};

// Closed forms in theta. b0_star_derivative and F_star_derivative are exact
// derivatives; H_star_closed is the printed closed form for H*, used as a check
// on critical_observables (which derives H* from the chain rule).
Real b0_star(const Real& theta);
Real b0_star_derivative(const Real& theta);
Real G_star(const Real& theta);
Real F_star(const Real& theta);
Real F_star_derivative(const Real& theta);
Real H_star_closed(const Real& theta);

// Throws DomainError outside (0, pi).
CriticalObservables critical_observables(const Real& theta);

// (R_b, R_c) at (theta, g): flyped relations minus the critical D'.
std::pair<Real, Real> critical_residuals(const Real& theta, const Real& g);

// Real roots of R_c(theta, g) = 0, which is quadratic in g; ascending.
std::optional<std::pair<Real, Real>> quadratic_roots(const Real& theta);

struct CriticalPoint {
    Real theta_c;
    Real g_c;
    Real inv_g_c;
    Real residual_b;
    Real residual_c;
    // Scan cell that bracketed the root, and which quadratic root was used.
    Real bracket_lo, bracket_hi;
    std::string branch;
    // Independent 2-D damped Newton solution.
    Real newton_theta, newton_g;
};

// Quadratic elimination plus bisection in theta, cross-checked by a 2-D Newton
// solve. tolerance >= 1e-14 bounds the bisection width.
CriticalPoint solve_critical(const Real& tolerance = Real("1e-14"));

} // namespace tangles
