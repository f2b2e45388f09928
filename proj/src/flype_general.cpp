#include "tangles/flype_general.hpp"

namespace tangles {

namespace detail {

NPoly npoly_div_n(const NPoly& p) {
    auto q = exact_div(p, NPoly::monomial(1));
    if (!q) throw DivisibilityFailure("expected a multiple of n, got " + p.str());
    return *q;
}

} // namespace detail

DPrimeModel DPrimeModel::published() {
    const NPoly n = NPoly::monomial(1);
    auto c = [](long v) { return NPoly(v); };
    DPrimeModel m;
    m.d1 = {{{5, 0}, n}, {{4, 1}, c(8)}, {{3, 2}, n * Rational(4) + c(4)}, {{2, 3}, c(24)}, {{6, 1}, c(16)}};
    m.d2 = {{{4, 1}, n},
            {{7, 0}, c(2)},
            {{3, 2}, c(16)},
            {{2, 3}, n * Rational(8) + c(20)},
            {{6, 1}, n * Rational(6) + c(14)},
            {{8, 0}, c(3)}};
    m.validity = 8;
    return m;
}

int DPrimeModel::min_weight() const {
    int w = validity + 1;
    for (const auto* poly : {&d1, &d2}) {
        for (const auto& [key, c] : *poly) w = std::min(w, key.first + 2 * key.second);
    }
    return w;
}

CensusSolution solve_census_series(const DPrimeModel& dp, int max_crossings, bool flyped) {
    if (max_crossings < 1) throw DomainError("max crossings must be at least 1");
    if (max_crossings > dp.validity) {
        throw OrderCapExceeded("requested " + std::to_string(max_crossings) + " crossings but the D' data is valid through " +
                               std::to_string(dp.validity));
    }
    ImplicitSystem<NPoly> sys;
    sys.var = Var::g;
    sys.unknown_start = {1, 2};
    sys.residual_start = {1, 2};
    sys.target = {max_crossings, max_crossings};
    sys.residuals = [&dp, flyped](const std::vector<TruncSeries<NPoly>>& u) {
        const auto& gt1 = u[0];
        const auto& gt2 = u[1];
        const auto g = TruncSeries<NPoly>::variable(Var::g, gt1.order());
        const auto zero = TruncSeries<NPoly>(Var::g, gt1.order());
        const auto lhs = flyped ? flyped_to_dprime(gt1, gt2, g) : unflyped_to_dprime(gt1, gt2, g, zero);
        const auto r1 = lhs.d1 - eval_dprime_poly(dp.d1, gt1, gt2);
        const auto r2 = lhs.d2 - eval_dprime_poly(dp.d2, gt1, gt2);
        return std::vector<TruncSeries<NPoly>>{r1, r2};
    };
    auto sol = implicit_solve(sys);
    return {sol[0], sol[1]};
}

CensusTable solve_census(const DPrimeModel& dp, int max_crossings, bool flyped) {
    const auto sol = solve_census_series(dp, max_crossings, flyped);
    CensusTable t;
    t.max_crossings = max_crossings;
    t.type1.resize(max_crossings + 1);
    t.type2.resize(max_crossings + 1);
    for (int p = 1; p <= max_crossings; ++p) {
        t.type1[p] = sol.gamma1[p];
        t.type2[p] = sol.gamma2[p];
    }
    return t;
}

} // namespace tangles
