#include "tangles/flype_general.hpp"
#include "tangles/flype_n2.hpp"
#include "tangles/published.hpp"

#include "doctest.h"

#include <set>

using namespace tangles;

namespace {

const OrientedCensus& census13() {
    static const OrientedCensus c = [] {
        const auto bd = bare_bundle_n2(14);
        const auto full = solve_oriented(14, bd);
        OrientedCensus c = full;
        c.max_crossings = 13;
        for (auto* s : {&c.q2, &c.dtheta, &c.b, &c.c, &c.g1, &c.g2, &c.gamma_b, &c.gamma_c, &c.gamma_1, &c.gamma_2}) {
            *s = s->truncated(13);
        }
        return c;
    }();
    return c;
}

const TruncSeries<Rational>& row(const OrientedCensus& c, const std::string& name) {
    if (name == "q2") return c.q2;
    if (name == "dtheta") return c.dtheta;
    if (name == "b") return c.b;
    if (name == "c") return c.c;
    if (name == "g1") return c.g1;
    if (name == "g2") return c.g2;
    if (name == "gamma_b") return c.gamma_b;
    return c.gamma_c;
}

// Printed cells that contradict the printed dtheta and b rows.
const std::set<std::pair<std::string, int>> kInconsistent = {
    {"c", 12}, {"c", 13}, {"g1", 12}, {"g1", 13}, {"g2", 12}, {"g2", 13},
};

TruncSeries<Rational> printed(const std::string& name, int order) {
    TruncSeries<Rational> s(Var::g, order);
    for (const auto& r : published_oriented_rows()) {
        if (r.name != name) continue;
        for (size_t i = 0; i < r.values.size(); ++i) {
            const int k = r.first + static_cast<int>(i);
            if (k <= order) s.coeff(k) = r.values[i];
        }
    }
    return s;
}

} // namespace

TEST_CASE("oriented census reproduces the printed rows") {
    const auto& c = census13();
    int checked = 0;
    for (const auto& r : published_oriented_rows()) {
        for (size_t i = 0; i < r.values.size(); ++i) {
            const int k = r.first + static_cast<int>(i);
            if (kInconsistent.count({r.name, k})) continue;
            CAPTURE(r.name);
            CAPTURE(k);
            CHECK(row(c, r.name)[k] == r.values[i]);
            ++checked;
        }
    }
    CHECK(checked == 96);
}

TEST_CASE("printed dtheta and b rows fix the inconsistent cells") {
    const auto& c = census13();
    const ThetaShift shift(printed("dtheta", 13), 1);
    const auto b = printed("b", 13);
    const auto g2 = (shift.x() * b).truncated(13);
    const auto p_c = printed("c", 13), p_g1 = printed("g1", 13), p_g2 = printed("g2", 13);
    for (int k = 1; k <= 13; ++k) {
        CAPTURE(k);
        CHECK(g2[k] == c.g2[k]);
        CHECK(b[k] - g2[k] == c.g1[k]);
        CHECK(g2[k] * 2 == c.c[k]);
        const bool bad = k >= 12;
        CHECK((p_g2[k] != g2[k]) == bad);
        CHECK((p_g1[k] != b[k] - g2[k]) == bad);
        CHECK((p_c[k] != g2[k] * 2) == bad);
    }
}

TEST_CASE("oriented identities") {
    const auto& c = census13();
    const ThetaShift shift(c.dtheta, 1);
    CHECK(c.g1 + c.g2 == c.b);
    CHECK(c.g2 * Rational(2) == c.c);
    CHECK((shift.x() * c.b).truncated(13) == c.g2);
    CHECK(c.gamma_1 + c.gamma_2 == c.gamma_b);
    CHECK(c.gamma_2 * Rational(2) == c.gamma_c);
    CHECK(c.dtheta[0] == 0);
    CHECK(c.q2[0] == 0);
}

TEST_CASE("oriented counts are nonnegative integers") {
    const auto& c = census13();
    for (const auto* s : {&c.gamma_b, &c.gamma_c, &c.gamma_1, &c.gamma_2}) {
        for (int k = 0; k <= 13; ++k) {
            CHECK((*s)[k] >= 0);
            CHECK((*s)[k].get_den() == 1);
        }
    }
}

TEST_CASE("oriented census at n = 2 matches the general census") {
    const auto& c = census13();
    const auto t = solve_census(DPrimeModel::published(), 8);
    for (int p = 1; p <= 8; ++p) {
        CAPTURE(p);
        CHECK(c.gamma_1[p] == t.type1[p].eval(Rational(2)));
        CHECK(c.gamma_2[p] == t.type2[p].eval(Rational(2)));
    }
}

TEST_CASE("n = 2 tilde relations agree with the general flyped relations") {
    const auto sol = solve_census_series(DPrimeModel::published(), 8);
    auto at2 = [](const TruncSeries<NPoly>& s) {
        return map_coeffs(s, [](const NPoly& p) { return p.eval(Rational(2)); });
    };
    const auto g1 = at2(sol.gamma1), g2 = at2(sol.gamma2);
    const auto g = TruncSeries<Rational>::variable(Var::g, 8);
    const auto d = tilde_relations_n2(g1 + g2, g2 * Rational(2), g);
    const auto gn = TruncSeries<NPoly>::variable(Var::g, 8);
    const auto general = flyped_to_dprime(sol.gamma1, sol.gamma2, gn);
    const auto d1 = at2(general.d1), d2 = at2(general.d2);
    CHECK(d.first == d1 + d2);
    CHECK(d.second == d2 * Rational(2));
}

TEST_CASE("solve_oriented rejects an order beyond the bundle") {
    const auto bd = bare_bundle_n2(4);
    CHECK_THROWS(solve_oriented(5, bd));
}
