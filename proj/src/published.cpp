#include "tangles/published.hpp"

namespace tangles {

namespace {

NPoly np(std::initializer_list<long> c) {
    NPoly p;
    int e = 0;
    for (long v : c) p = p + NPoly::monomial(e++, Rational(v));
    return p;
}

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ThetaElem xpoly(std::initializer_list<long> c) {
    XPoly p;
    int e = 0;
    for (long v : c) p = p + XPoly::monomial(e++, Rational(v));
    return ThetaElem(p);
}

} // namespace

std::vector<NPoly> published_census_type1() {
    return {NPoly(), np({1}), NPoly(), np({2}), np({2}), np({6, 3}), np({30, 2}), np({62, 40, 2}), np({382, 106, 2})};
}

std::vector<NPoly> published_census_type2() {
    return {NPoly(),       NPoly(),       np({1}),           np({1}),           np({3, 1}),
            np({9, 1}),    np({21, 11, 1}), np({101, 32, 1}), np({346, 153, 24, 1})};
}

std::vector<PublishedRow> published_oriented_rows() {
    std::vector<PublishedRow> rows;
    rows.push_back({"q2", 1, ints({1, 2, 7, 29, 137, 679, 3515, 18677, 101463, 560062, 3132639, 17708417, 100998567})});
    rows.push_back({"dtheta", 2,
                    {make_rational(1), make_rational(1), make_rational(4), make_rational(13), make_rational(319, 6),
                     make_rational(437, 2), make_rational(1941, 2), make_rational(13424, 3), make_rational(858263, 40),
                     make_rational(844871, 8), make_rational(6386963, 12)}});
    rows.push_back({"b", 1, ints({1, 0, -1, -3, -9, -27, -103, -411, -1838, -8484, -41000, -202822, -1027954})});
    rows.push_back({"c", 1, ints({0, 0, -2, -2, -6, -18, -74, -314, -1420, -6696, -32592, -162728, -828344})});
    rows.push_back({"g1", 1, ints({1, 0, 0, -2, -6, -18, -66, -254, -1128, -5136, -24704, -121458, -613782})});
    rows.push_back({"g2", 1, ints({0, 0, -1, -1, -3, -9, -37, -157, -710, -3348, -16296, -81364, -414172})});
    rows.push_back({"gamma_b", 1, ints({1, 1, 3, 7, 23, 81, 319, 1358, 6132, 28916, 140852, 704020, 3592394})});
    rows.push_back({"gamma_c", 1, ints({0, 2, 2, 10, 22, 94, 338, 1512, 6700, 31944, 155200, 778168, 3972088})});
    return rows;
}

std::vector<BareAnchor> published_bare_anchors() {
    const ThetaElem zero;
    const ThetaElem x = ThetaElem::v();
    std::vector<BareAnchor> a;
    // b0 = tau - 6(1+2x) tau^2
    a.push_back({"b0", 0, zero});
    a.push_back({"b0", 1, ThetaElem(1L)});
    a.push_back({"b0", 2, xpoly({-6, -12})});
    // G = 1 + 2(1+2x) tau
    a.push_back({"G", 0, ThetaElem(1L)});
    a.push_back({"G", 1, xpoly({2, 4})});
    // Gamma_b = tau - tau^2
    a.push_back({"gamma_b", 0, zero});
    a.push_back({"gamma_b", 1, ThetaElem(1L)});
    a.push_back({"gamma_b", 2, ThetaElem(-1L)});
    // Gamma_c = 2x tau + 2(1-x) tau^2
    a.push_back({"gamma_c", 0, zero});
    a.push_back({"gamma_c", 1, x * Rational(2)});
    a.push_back({"gamma_c", 2, xpoly({2, -2})});
    // D'_b = (6 + 12x + 4T_2 + 4T_3) tau^5, D'_c = (8 + 24x + 8T_2 + 10T_3 + 2T_5) tau^5
    for (int k = 0; k < 5; ++k) {
        a.push_back({"dprime_b", k, zero});
        a.push_back({"dprime_c", k, zero});
    }
    a.push_back({"dprime_b", 5, ThetaElem(6L) + x * Rational(12) + cheb(2) * Rational(4) + cheb(3) * Rational(4)});
    a.push_back({"dprime_c", 5,
                 ThetaElem(8L) + x * Rational(24) + cheb(2) * Rational(8) + cheb(3) * Rational(10) +
                     cheb(5) * Rational(2)});
    return a;
}

} // namespace tangles
