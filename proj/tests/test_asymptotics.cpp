#include "tangles/asymptotics.hpp"
#include "tangles/errors.hpp"
#include "tangles/published.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include <cstdio>

using namespace tangles;

namespace {

std::vector<Rational> printed_gamma_b() {
    for (const auto& r : published_oriented_rows()) {
        if (r.name == "gamma_b") return r.values;
    }
    return {};
}

std::string five_decimals(const Real& x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", static_cast<double>(x));
    return buf;
}

} // namespace

TEST_CASE("pure exponentials are extrapolated exactly") {
    std::vector<Rational> a;
    Rational p3(1);
    for (int p = 1; p <= 12; ++p) {
        p3 *= 3;
        a.push_back(p3);
    }
    auto est = growth_fit(a, Real(0), false);
    CHECK(abs(est.rate - 3) < Real("1e-40"));
    CHECK(abs(est.error_bar) < Real("1e-40"));

    std::vector<Rational> b;
    for (int p = 1; p <= 12; ++p) b.push_back(a[p - 1] / Rational(p * p));
    est = growth_fit(b, Real(-2), false);
    CHECK(abs(est.rate - 3) < Real("1e-40"));
}

TEST_CASE("growth fit of the oriented census") {
    const auto gamma = printed_gamma_b();
    const auto est = growth_fit(gamma, Real(-2), true);
    const Real target("6.28329764");
    CHECK(abs(est.rate / target - 1) < Real("0.05"));
    CHECK(abs(est.rate - target) < abs(est.ratios.back() - target));
    CHECK(est.error_bar >= 0);
    CHECK(est.extrapolants.size() + 1 == est.corrected.size());
}

TEST_CASE("reference constants") {
    const auto refs = reference_constants();
    REQUIRE(refs.size() == 4);
    CHECK(five_decimals(refs[1].value) == "6.91167");
    CHECK(five_decimals(refs[2].value) == "6.14793");
    CHECK(five_decimals(refs[3].value) == "6.75000");
}

TEST_CASE("growth_fit needs six trailing nonzero coefficients") {
    CHECK_THROWS_AS(growth_fit({1, 2, 3, 4, 5}, Real(0), false), InsufficientData);
    CHECK_THROWS_AS(growth_fit({1, 2, 3, 4, 5, 6, 0}, Real(0), false), InsufficientData);
}

TEST_CASE("link count estimate") {
    const auto gamma = printed_gamma_b();
    const auto links = link_count_estimate(gamma, 1);
    REQUIRE(links.size() == gamma.size());
    CHECK(links.front().p == 2);
    CHECK(links.front().f_p == Rational(1, 2));
    CHECK(links[11].p == 13);
    CHECK(links[11].f_p == Rational(704020, 13));

    std::vector<Rational> f;
    for (const auto& l : links) f.push_back(l.f_p);
    const auto lf = growth_fit(f, Real(-3), true, 2);
    const auto tf = growth_fit(gamma, Real(-2), true);
    CHECK(abs(lf.rate - tf.rate) <= lf.error_bar + tf.error_bar);
}

TEST_CASE("singularity estimate on synthetic series") {
    std::vector<Real> a;
    for (int k = 1; k <= 20; ++k) a.push_back(pow(Real(4), k));
    auto est = singularity_estimate(a);
    CHECK_FALSE(est.negative_dominant);
    CHECK(abs(est.radius - Real("0.25")) < Real("1e-40"));

    // Dominant singularity on the negative axis at -0.3, physical one at 0.5.
    std::vector<Real> b;
    for (int k = 1; k <= 25; ++k) b.push_back(pow(Real(2), k) + pow(Real(-1) / Real("0.3"), k));
    est = singularity_estimate(b);
    CHECK(est.negative_dominant);
    CHECK(abs(est.negative_radius / Real("0.3") - 1) < Real("0.05"));
    CHECK(abs(est.radius / Real("0.5") - 1) < Real("0.05"));

    CHECK_THROWS_AS(singularity_estimate({1, 2, 3}), InsufficientData);
}
