#pragma once

#include "tangles/sixvertex.hpp"

namespace tangles {

// Table 2 rows as g-series with Rational coefficients.
struct OrientedCensus {
    int max_crossings = 0;
    TruncSeries<Rational> q2;
    TruncSeries<Rational> dtheta;  // theta - pi/2
    TruncSeries<Rational> b;
    TruncSeries<Rational> c;
    TruncSeries<Rational> g1;
    TruncSeries<Rational> g2;
    TruncSeries<Rational> gamma_b;
    TruncSeries<Rational> gamma_c;
    TruncSeries<Rational> gamma_1;
    TruncSeries<Rational> gamma_2;
};

// Flyped n = 2 relations in the renormalized coupling g. Returns (D~'_b, D~'_c).
template <class R>
ChannelPair<TruncSeries<R>> tilde_relations_n2(const TruncSeries<R>& gt_b, const TruncSeries<R>& gt_c,
                                               const TruncSeries<R>& g) {
    const R half(Rational(1, 2));
    const auto one = TruncSeries<R>::constant(g.var(), g.order(), R(1L));
    const auto hb = series_igeom(gt_b - g * (one + gt_b));
    const auto plus = series_igeom((one - g) * (gt_c + gt_b) - g);
    const auto minus = series_igeom((one + g) * (gt_c - gt_b) + g);
    const auto vc = (plus + minus) * half;
    const auto vb = (plus - minus) * half;
    const auto hc = vc;
    return {hb + vb - gt_b + g, hc + vc - gt_c};
}

// Evaluates theta-dependent coefficients at theta = pi/2 + dtheta(g), where
// dtheta has zero constant term.
class ThetaShift {
public:
    ThetaShift(const TruncSeries<Rational>& dtheta, int max_degree);
    TruncSeries<Rational> operator()(const ThetaElem& e) const;
    // sum_k S_k(theta(g)) tau(g)^k
    TruncSeries<Rational> compose(const TruncSeries<ThetaElem>& s, const TruncSeries<Rational>& tau) const;
    const TruncSeries<Rational>& x() const { return xpow_[1]; }

private:
    int order_;
    TruncSeries<Rational> cos_;
    std::vector<TruncSeries<Rational>> xpow_;
};

// Solves for tau(g) and dtheta(g) so that the flyped relations reproduce the
// bundle's D'_b, D'_c; P <= bundle.order.
OrientedCensus solve_oriented(int max_crossings, const BareSeriesBundle& bundle);

} // namespace tangles
