#include "tangles/flype_n2.hpp"

#include "tangles/implicit_solve.hpp"

namespace tangles {

namespace {

int max_x_degree(const TruncSeries<ThetaElem>& s) {
    int d = 1;
    for (int k = 0; k <= s.order(); ++k) {
        if (!s[k].even().is_zero()) d = std::max(d, s[k].even().degree());
        if (!s[k].odd().is_zero()) d = std::max(d, s[k].odd().degree());
    }
    return d;
}

} // namespace

ThetaShift::ThetaShift(const TruncSeries<Rational>& dtheta, int max_degree) : order_(dtheta.order()) {
    auto [sn, cs] = series_sin_cos(dtheta);
    cos_ = cs;
    xpow_.push_back(TruncSeries<Rational>::constant(dtheta.var(), order_, Rational(1)));
    const auto x = sn * Rational(-1);
    for (int j = 1; j <= max_degree; ++j) xpow_.push_back((xpow_.back() * x).truncated(order_));
}

TruncSeries<Rational> ThetaShift::operator()(const ThetaElem& e) const {
    auto lin = [this](const XPoly& p) {
        TruncSeries<Rational> acc(xpow_[0].var(), order_);
        for (const auto& [j, c] : p.terms()) {
            if (j >= static_cast<int>(xpow_.size())) throw DomainError("ThetaShift: degree beyond the precomputed powers");
            acc = acc + xpow_[j] * c;
        }
        return acc;
    };
    auto out = lin(e.even());
    if (!e.odd().is_zero()) out = out + (cos_ * lin(e.odd())).truncated(order_);
    return out;
}

TruncSeries<Rational> ThetaShift::compose(const TruncSeries<ThetaElem>& s, const TruncSeries<Rational>& tau) const {
    if (!is_zero(tau[0])) throw NonzeroConstantTerm("ThetaShift::compose: tau must vanish at g = 0");
    const int top = std::min(s.order(), order_);
    // Horner in tau; terms beyond s.order() are O(g^{s.order()+1}) at least.
    TruncSeries<Rational> acc(tau.var(), order_);
    for (int k = top; k >= 0; --k) acc = ((acc * tau).truncated(order_) + (*this)(s[k]));
    const int valid = std::min(order_, s.order());
    return acc.truncated(valid);
}

OrientedCensus solve_oriented(int max_crossings, const BareSeriesBundle& bundle) {
    const int P = max_crossings;
    if (P < 2) throw DomainError("solve_oriented needs at least two crossings");
    if (P > bundle.order) {
        throw OrderCapExceeded("bundle order " + std::to_string(bundle.order) + " is below the requested " +
                               std::to_string(P));
    }
    int deg = 1;
    for (const auto* s : {&bundle.gamma_b, &bundle.gamma_c, &bundle.dprime_b, &bundle.dprime_c, &bundle.b}) {
        deg = std::max(deg, max_x_degree(*s));
    }

    ImplicitSystem<Rational> sys;
    sys.var = Var::g;
    // tau = g + O(g^2) is seeded: theta only enters through tau, so the
    // linearization at tau = 0 would be singular.
    sys.unknown_start = {2, 1};
    sys.residual_start = {2, 2};
    sys.initial = {TruncSeries<Rational>::variable(Var::g, 1), TruncSeries<Rational>(Var::g, 0)};
    sys.target = {P, P - 1};
    sys.residuals = [&bundle, deg](const std::vector<TruncSeries<Rational>>& u) {
        const auto& tau = u[0];
        const int W = tau.order();
        const ThetaShift at(u[1], deg);
        const auto gb = at.compose(bundle.gamma_b, tau);
        const auto gc = at.compose(bundle.gamma_c, tau);
        const auto g = TruncSeries<Rational>::variable(Var::g, W);
        const auto lhs = tilde_relations_n2(gb, gc, g);
        return std::vector<TruncSeries<Rational>>{lhs.first - at.compose(bundle.dprime_b, tau),
                                                  lhs.second - at.compose(bundle.dprime_c, tau)};
    };
    const auto sol = implicit_solve(sys);

    OrientedCensus out;
    out.max_crossings = P;
    out.q2 = sol[0];
    out.dtheta = sol[1];
    // dtheta enters every row multiplied by at least one power of g.
    std::vector<Rational> padded(sol[1].coeffs());
    const TruncSeries<Rational> dth(Var::g, P, padded);
    const ThetaShift at(dth, deg);
    out.b = at.compose(bundle.b, out.q2);
    out.g2 = (out.b * at.x()).truncated(P);
    out.g1 = out.b - out.g2;
    out.c = out.g2 * Rational(2);
    out.gamma_b = at.compose(bundle.gamma_b, out.q2);
    out.gamma_c = at.compose(bundle.gamma_c, out.q2);
    out.gamma_2 = out.gamma_c * make_rational(1, 2);
    out.gamma_1 = out.gamma_b - out.gamma_2;
    return out;
}

} // namespace tangles
