#pragma once

#include "tangles/biseries.hpp"
#include "tangles/implicit_solve.hpp"
#include "tangles/series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tangles {

// D'_1, D'_2 as polynomials in (Gamma_1, Gamma_2) with NPoly coefficients,
// valid through weighted degree `validity` (Gamma_1 weight 1, Gamma_2 weight 2).
struct DPrimeModel {
    using Poly2 = std::map<std::pair<int, int>, NPoly>;
    Poly2 d1;
    Poly2 d2;
    int validity = 8;

    // The five-crossing-and-up 2PI data quoted in the literature, exact to g^8.
    static DPrimeModel published();

    int min_weight() const;
};

struct CensusTable {
    int max_crossings = 0;
    // Indexed by crossing number p; entry 0 is unused.
    std::vector<NPoly> type1;
    std::vector<NPoly> type2;
    TruncSeries<NPoly> t_series;
};

template <class S>
struct DPrimePair {
    S d1;
    S d2;
};

namespace detail {

inline TruncSeries<NPoly> one_like(const TruncSeries<NPoly>& s) {
    return TruncSeries<NPoly>::constant(s.var(), s.order(), NPoly(1L));
}
inline BiSeries<NPoly> one_like(const BiSeries<NPoly>& s) {
    return BiSeries<NPoly>::constant(s.order(), NPoly(1L), s.weight_u(), s.weight_w());
}

NPoly npoly_div_n(const NPoly& p);

inline TruncSeries<NPoly> div_n(const TruncSeries<NPoly>& s) {
    return map_coeffs(s, [](const NPoly& p) { return npoly_div_n(p); });
}
inline BiSeries<NPoly> div_n(const BiSeries<NPoly>& s) {
    BiSeries<NPoly> r(s.order(), s.weight_u(), s.weight_w());
    for (const auto& [key, c] : s.terms()) r.add(key.first, key.second, npoly_div_n(c));
    return r;
}

inline const NPoly& n_marker() {
    static const NPoly n = NPoly::monomial(1);
    return n;
}

} // namespace detail

// Unflyped channel relations: Gamma_{0,±} -> H_{0,±} -> (H_1, H_2, V_2) -> D'_i.
template <class S>
DPrimePair<S> unflyped_to_dprime(const S& gamma1, const S& gamma2, const S& g1, const S& g2) {
    const NPoly& n = detail::n_marker();
    const S gp = gamma2 + gamma1;
    const S gm = gamma2 - gamma1;
    const S g0 = gamma2 * (n + NPoly(1L)) + gamma1;
    const S hp = series_igeom(gp);
    const S hm = series_igeom(gm);
    const S h0 = series_igeom(g0);
    const S h1 = (hp - hm) * NPoly(Rational(1, 2));
    const S h2 = (hp + hm) * NPoly(Rational(1, 2));
    const S v2 = detail::div_n(h0 - hp);
    // V_1 = H_1
    return {h1 + h1 - gamma1 - g1, h2 + v2 - gamma2 - g2};
}

// Flyped channel relations in the renormalized coupling g (g_1 = g, g_2 = 0).
template <class S>
DPrimePair<S> flyped_to_dprime(const S& gt1, const S& gt2, const S& g) {
    const NPoly& n = detail::n_marker();
    const S one = detail::one_like(g);
    const S gp = gt2 + gt1;
    const S gm = gt2 - gt1;
    const S g0 = gt2 * (n + NPoly(1L)) + gt1;
    const S hp = series_igeom((one - g) * gp - g);
    const S hm = series_igeom((one + g) * gm + g);
    const S h0 = series_igeom((one - g) * g0 - g);
    const S d1 = hp - hm - gt1 + g;
    const S d2 = (hp + hm) * NPoly(Rational(1, 2)) + detail::div_n(h0 - hp) - gt2;
    return {d1, d2};
}

// Evaluates a D' polynomial at series arguments.
template <class S>
S eval_dprime_poly(const DPrimeModel::Poly2& poly, const S& gamma1, const S& gamma2) {
    int max_a = 0, max_b = 0;
    for (const auto& [key, c] : poly) {
        max_a = std::max(max_a, key.first);
        max_b = std::max(max_b, key.second);
    }
    const S one = detail::one_like(gamma1);
    std::vector<S> p1{one}, p2{one};
    for (int a = 1; a <= max_a; ++a) p1.push_back(p1.back() * gamma1);
    for (int b = 1; b <= max_b; ++b) p2.push_back(p2.back() * gamma2);
    S acc = one * NPoly();
    for (const auto& [key, c] : poly) acc = acc + p1[key.first] * p2[key.second] * c;
    return acc;
}

// t(g) and renormalized four-point functions from bare two-coupling data:
// t = G(1, g/t^2), X_ren(g) = t^{-2} X(1, g/t^2).
template <class R>
struct Renormalized {
    BiSeries<R> t;
    std::vector<BiSeries<R>> series;
};

template <class R>
BiSeries<R> rescale_couplings(const BiSeries<R>& x, const BiSeries<R>& u) {
    // sum_{jk} x_jk g1^j g2^k u^{j+k}
    const int order = x.order();
    std::vector<BiSeries<R>> upow{BiSeries<R>::constant(order, R(1L), x.weight_u(), x.weight_w())};
    BiSeries<R> acc(order, x.weight_u(), x.weight_w());
    for (const auto& [key, c] : x.terms()) {
        const int m = key.first + key.second;
        while (static_cast<int>(upow.size()) <= m) upow.push_back((upow.back() * u).truncated(order));
        acc = acc + BiSeries<R>::monomial(order, key.first, key.second, c, x.weight_u(), x.weight_w()) * upow[m];
    }
    return acc.truncated(order);
}

template <class R>
Renormalized<R> renormalize(const BiSeries<R>& bare_g, const std::vector<BiSeries<R>>& bare_four_point) {
    if (bare_g.coeff(0, 0) != R(1L)) throw DomainError("renormalize: G(1, 0) must be 1");
    const int order = bare_g.order();
    auto t = BiSeries<R>::constant(order, R(1L), bare_g.weight_u(), bare_g.weight_w());
    for (int it = 0; it <= order; ++it) {
        const auto u = series_inverse((t * t).truncated(order));
        t = rescale_couplings(bare_g, u);
    }
    const auto u = series_inverse((t * t).truncated(order));
    Renormalized<R> out{t, {}};
    for (const auto& x : bare_four_point) out.series.push_back((u * rescale_couplings(x.truncated(order), u)).truncated(order));
    return out;
}

// Solves D~'_i(g) = D'_i[Gamma~_1, Gamma~_2] order by order. With flyped = false
// the unflyped relations (couplings g_1 = g, g_2 = 0) replace the flyped ones.
struct CensusSolution {
    TruncSeries<NPoly> gamma1;
    TruncSeries<NPoly> gamma2;
};
CensusSolution solve_census_series(const DPrimeModel& dp, int max_crossings, bool flyped = true);

CensusTable solve_census(const DPrimeModel& dp, int max_crossings, bool flyped = true);

} // namespace tangles
