#pragma once

#include "tangles/series.hpp"

#include <utility>

namespace tangles {

// Bare n = 2 (six-vertex) series in tau = q^2 with coefficients in theta.
struct BareSeriesBundle {
    int order = 0;
    TruncSeries<ThetaElem> b0;
    TruncSeries<HalfAngleElem> w1;
    TruncSeries<ThetaElem> G;
    TruncSeries<ThetaElem> F;
    TruncSeries<ThetaElem> H;
    TruncSeries<ThetaElem> b;
    TruncSeries<ThetaElem> gamma_b;
    TruncSeries<ThetaElem> gamma_c;
    TruncSeries<ThetaElem> dprime_b;
    TruncSeries<ThetaElem> dprime_c;
    // G and F as series in b0 at fixed theta, one order beyond `order`.
    TruncSeries<ThetaElem> G_b0;
    TruncSeries<ThetaElem> F_b0;
};

// Full extraction chain to tau^order; runs check_anchors before returning.
BareSeriesBundle bare_bundle_n2(int order);

// Throws AnchorMismatch unless the low-order expansions and parity invariants hold.
void check_anchors(const BareSeriesBundle& bundle);

// Planar moments of the effective one-matrix model: G(b0) at fixed theta as a
// series in b0 over the half-angle ring, through b0^order.
TruncSeries<ThetaElem> two_point_in_b0(int order);

template <class S>
struct ChannelPair {
    S first;
    S second;
};

// D'_b, D'_c from Gamma_b, Gamma_c and the couplings b, c (closure H_c = V_c).
template <class R>
ChannelPair<TruncSeries<R>> dprimes_n2(const TruncSeries<R>& gamma_b, const TruncSeries<R>& gamma_c,
                                       const TruncSeries<R>& b, const TruncSeries<R>& c) {
    const R half(Rational(1, 2));
    const auto hb = series_igeom(gamma_b);
    const auto plus = series_igeom(gamma_c + gamma_b);
    const auto minus = series_igeom(gamma_c - gamma_b);
    const auto vc = (plus + minus) * half;
    const auto vb = (plus - minus) * half;
    const auto hc = vc;
    return {hb + vb - gamma_b - b, hc + vc - gamma_c - c};
}

} // namespace tangles
