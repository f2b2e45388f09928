#include "tangles/critical.hpp"
#include "tangles/errors.hpp"

#include "doctest.h"

#include <string>

#include <boost/math/constants/constants.hpp>

using namespace tangles;

namespace {

const Real kPi = boost::math::constants::pi<Real>();

bool near(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol * (1 + abs(b)); }

const CriticalPoint& solved() {
    static const CriticalPoint cp = solve_critical();
    return cp;
}

bool decimal_prefix(const Real& x, const std::string& want) { return x.str(30).rfind(want, 0) == 0; }

Real central_difference(Real (*f)(const Real&), const Real& t) {
    const Real h("1e-12");
    return (f(t + h) - f(t - h)) / (2 * h);
}

} // namespace

TEST_CASE("critical line closed forms at theta = pi/2") {
    const Real t = kPi / 2;
    CHECK(near(b0_star(t), 1 / (4 * kPi), Real("1e-45")));
    CHECK(near(G_star(t), 2 * kPi - kPi * kPi / 2, Real("1e-45")));
    CHECK(near(H_star_closed(t), -5 * kPi / 3 + kPi * kPi / 2, Real("1e-45")));
}

TEST_CASE("derivatives match finite differences") {
    for (const char* s : {"0.3", "1.0", "1.6", "2.5", "3.0"}) {
        const Real t(s);
        CAPTURE(s);
        CHECK(near(b0_star_derivative(t), central_difference(b0_star, t), Real("1e-20")));
        CHECK(near(F_star_derivative(t), central_difference(F_star, t), Real("1e-20")));
    }
}

TEST_CASE("chain-rule H agrees with the closed form") {
    for (const char* s : {"0.4", "1.2", "1.6078", "2.2", "2.9"}) {
        const Real t(s);
        CAPTURE(s);
        const auto o = critical_observables(t);
        CHECK(near(o.H, H_star_closed(t), Real("1e-40")));
        CHECK(near(o.x, cos(t), Real("1e-45")));
        CHECK(near(o.c, 2 * o.x * o.b, Real("1e-40")));
    }
}

TEST_CASE("critical_observables rejects theta outside (0, pi)") {
    CHECK_THROWS_AS(critical_observables(Real(0)), DomainError);
    CHECK_THROWS_AS(critical_observables(kPi), DomainError);
    CHECK_THROWS_AS(critical_observables(Real(-1)), DomainError);
}

TEST_CASE("quadratic roots annihilate R_c") {
    for (const char* s : {"1.0", "1.6", "2.0"}) {
        const Real t(s);
        const auto roots = quadratic_roots(t);
        if (!roots) continue;
        CAPTURE(s);
        CHECK(abs(critical_residuals(t, roots->first).second) < Real("1e-40"));
        CHECK(abs(critical_residuals(t, roots->second).second) < Real("1e-40"));
        CHECK(roots->first <= roots->second);
    }
}

TEST_CASE("critical point") {
    const auto& cp = solved();
    CHECK(decimal_prefix(cp.theta_c, "1.60780446"));
    CHECK(decimal_prefix(cp.inv_g_c, "6.28329764"));
    CHECK(abs(cp.residual_b) < Real("1e-12"));
    CHECK(abs(cp.residual_c) < Real("1e-12"));
    CHECK(abs(cp.newton_theta - cp.theta_c) < Real("1e-10"));
    CHECK(abs(cp.newton_g - cp.g_c) < Real("1e-10"));
    CHECK(cp.bracket_lo <= cp.theta_c);
    CHECK(cp.theta_c <= cp.bracket_hi);
    CHECK(near(cp.inv_g_c * cp.g_c, Real(1), Real("1e-45")));
    // Between the n = 1 flyped constant and the unflyped oriented one.
    CHECK(cp.inv_g_c > (101 + sqrt(Real(21001))) / 40);
    CHECK(cp.inv_g_c < 16 / (kPi * (kPi - 4) * (kPi - 4)));
}
