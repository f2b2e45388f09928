#include "tangles/oracle.hpp"
#include "tangles/sixvertex.hpp"

#include "doctest.h"

using namespace tangles;

namespace {

const BareSeriesBundle& bundle6() {
    static const BareSeriesBundle b = bare_bundle_n2(6);
    return b;
}

const OracleBundle& oracle4() {
    static const OracleBundle b = oracle_bundle(4);
    return b;
}

// sum_k P_k(x) u^k -> sum x^m u^k mapped to g2^m (g1 + g2)^(k - m).
BiSeries<Rational> to_couplings(const TruncSeries<ThetaElem>& s, int order) {
    BiSeries<Rational> out(order);
    const auto g1 = BiSeries<Rational>::monomial(order, 1, 0);
    const auto g2 = BiSeries<Rational>::monomial(order, 0, 1);
    const auto one = BiSeries<Rational>::constant(order, Rational(1));
    for (int k = 0; k <= std::min(order, s.order()); ++k) {
        REQUIRE(s[k].is_even());
        for (const auto& [m, a] : s[k].even().terms()) {
            REQUIRE(m <= k);
            auto term = one * a;
            for (int i = 0; i < m; ++i) term = term * g2;
            for (int i = 0; i < k - m; ++i) term = term * (g1 + g2);
            out = out + term;
        }
    }
    return out;
}

BiSeries<Rational> at_n(const BiSeries<NPoly>& s, long n) {
    BiSeries<Rational> out(s.order(), s.weight_u(), s.weight_w());
    for (const auto& [key, c] : s.terms()) out.add(key.first, key.second, c.eval(Rational(n)));
    return out;
}

} // namespace

TEST_CASE("bundle passes its anchors") {
    CHECK_NOTHROW(check_anchors(bundle6()));
    CHECK(bundle6().order == 6);
    auto broken = bundle6();
    broken.gamma_b.coeff(1) = ThetaElem(2L);
    CHECK_THROWS_AS(check_anchors(broken), AnchorMismatch);
}

TEST_CASE("structural relations") {
    const auto& bd = bundle6();
    CHECK((bd.b0 * bd.G * bd.G).truncated(bd.order) == bd.b);
    for (int k = 0; k <= bd.order; ++k) {
        CHECK(bd.G[k].is_even());
        CHECK(bd.H[k].is_odd());
        CHECK(bd.F_b0[k].is_even());
    }
    // G = 1 + 2 b0 dF/db0 in the b0 variable.
    for (int k = 1; k <= bd.F_b0.order(); ++k) CHECK(bd.G_b0[k] == bd.F_b0[k] * Rational(2 * k));
    CHECK(bd.G_b0[0] == ThetaElem(1L));
}

TEST_CASE("dprimes_n2 with vanishing four-point functions") {
    const auto b = TruncSeries<Rational>::variable(Var::g, 5);
    const auto c = b * Rational(3);
    const TruncSeries<Rational> zero(Var::g, 5);
    const auto d = dprimes_n2(zero, zero, b, c);
    CHECK(d.first == -b);
    CHECK(d.second == -c);
}

TEST_CASE("n = 2 bridge: renormalized four-point functions against the oracle") {
    const auto& bd = bundle6();
    const auto& orc = oracle4();
    const int K = orc.order;
    const auto tau_of_b = series_revert(bd.b);
    const auto gb = to_couplings(series_compose(bd.gamma_b, tau_of_b), K);
    const auto gc = to_couplings(series_compose(bd.gamma_c, tau_of_b), K);
    CHECK(gb == at_n(orc.gamma1 + orc.gamma2, 2));
    CHECK(gc == at_n(orc.gamma2, 2) * Rational(2));
}

TEST_CASE("n = 2 bridge: bare two-point function against the oracle") {
    const auto& bd = bundle6();
    const auto& orc = oracle4();
    CHECK(to_couplings(bd.G_b0, orc.order) == at_n(orc.bare_G, 2).truncated(orc.order));
}
