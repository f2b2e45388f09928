#include "tangles/flype_general.hpp"
#include "tangles/oracle.hpp"
#include "tangles/published.hpp"

#include "doctest.h"

using namespace tangles;

namespace {

const CensusTable& flyped8() {
    static const CensusTable t = solve_census(DPrimeModel::published(), 8);
    return t;
}

} // namespace

TEST_CASE("flyped census reproduces the printed table") {
    const auto& t = flyped8();
    const auto p1 = published_census_type1();
    const auto p2 = published_census_type2();
    for (int p = 1; p <= 8; ++p) {
        CAPTURE(p);
        CHECK(t.type1[p] == p1[p]);
        CHECK(t.type2[p] == p2[p]);
    }
}

TEST_CASE("census entries have degree at most p - 1 and nonnegative integer coefficients") {
    const auto& t = flyped8();
    for (int p = 1; p <= 8; ++p) {
        for (const auto* row : {&t.type1, &t.type2}) {
            const NPoly& c = (*row)[p];
            if (c.is_zero()) continue;
            CHECK(c.degree() <= p - 1);
            CHECK(c.low_degree() >= 0);
            for (const auto& [e, v] : c.terms()) {
                CHECK(v > 0);
                CHECK(v.get_den() == 1);
            }
        }
    }
}

TEST_CASE("unflyped counts dominate flyped counts") {
    const auto u = solve_census(DPrimeModel::published(), 8, false);
    const auto& f = flyped8();
    for (int p = 1; p <= 8; ++p) {
        for (long n : {1L, 2L, 3L}) {
            CHECK(u.type1[p].eval(Rational(n)) >= f.type1[p].eval(Rational(n)));
            CHECK(u.type2[p].eval(Rational(n)) >= f.type2[p].eval(Rational(n)));
        }
    }
}

TEST_CASE("unflyped relations with vanishing four-point functions") {
    const auto g = TruncSeries<NPoly>::variable(Var::g, 6);
    const TruncSeries<NPoly> zero(Var::g, 6);
    const auto g2 = (g * g).truncated(6);
    const auto d = unflyped_to_dprime(zero, zero, g, g2);
    CHECK(d.d1 == -g);
    CHECK(d.d2 == -g2);
}

TEST_CASE("flyped relations vanish on the solution") {
    const auto dp = DPrimeModel::published();
    const auto sol = solve_census_series(dp, 8);
    const auto g = TruncSeries<NPoly>::variable(Var::g, 8);
    const auto lhs = flyped_to_dprime(sol.gamma1, sol.gamma2, g);
    CHECK(lhs.d1 == eval_dprime_poly(dp.d1, sol.gamma1, sol.gamma2));
    CHECK(lhs.d2 == eval_dprime_poly(dp.d2, sol.gamma1, sol.gamma2));
}

TEST_CASE("published D' agrees with the oracle where both are exact") {
    const auto ob = oracle_bundle(5);
    const auto orc = dprime_model_from_oracle(ob);
    const auto pub = DPrimeModel::published();
    auto check = [&](const DPrimeModel::Poly2& a, const DPrimeModel::Poly2& b) {
        for (int i = 0; i <= 5; ++i) {
            for (int j = 0; i + j <= 5 && i + 2 * j <= orc.validity; ++j) {
                auto get = [&](const DPrimeModel::Poly2& m) {
                    auto it = m.find({i, j});
                    return it == m.end() ? NPoly() : it->second;
                };
                CAPTURE(i);
                CAPTURE(j);
                CHECK(get(a) == get(b));
            }
        }
    };
    check(orc.d1, pub.d1);
    check(orc.d2, pub.d2);
    CHECK(pub.min_weight() == 5);
}

TEST_CASE("oracle-sourced census agrees with the printed table where exact") {
    const auto ob = oracle_bundle(5);
    const auto dp = dprime_model_from_oracle(ob);
    const auto t = solve_census(dp, std::min(8, dp.validity));
    const auto p1 = published_census_type1();
    for (int p = 1; p <= t.max_crossings; ++p) CHECK(t.type1[p] == p1[p]);
    CHECK(oracle_t_series(ob)[0] == NPoly(1L));
}
