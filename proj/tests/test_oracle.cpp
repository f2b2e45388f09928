#include "tangles/flype_general.hpp"
#include "tangles/oracle.hpp"

#include "doctest.h"

using namespace tangles;

namespace {

RibbonDiagram four_leg(int vertices, std::vector<std::pair<int, int>> pairs) {
    RibbonDiagram d;
    d.legs = 4;
    d.kinds.assign(vertices, VertexKind::cross);
    d.pairing.assign(d.half_edges(), -1);
    for (auto [a, b] : pairs) {
        d.pairing[a] = b;
        d.pairing[b] = a;
    }
    return d;
}

// Legs 0..3 on the outer vertex, one crossing on half-edges 4..7.
RibbonDiagram single_crossing() { return four_leg(1, {{0, 4}, {1, 7}, {2, 6}, {3, 5}}); }

// Two crossings side by side, joined by two propagators.
RibbonDiagram horizontal_pair() { return four_leg(2, {{0, 4}, {3, 5}, {6, 8}, {7, 11}, {1, 10}, {2, 9}}); }

BiSeries<NPoly> n_zero_part(const BiSeries<NPoly>& s) {
    BiSeries<NPoly> r(s.order(), s.weight_u(), s.weight_w());
    for (const auto& [key, c] : s.terms()) r.add(key.first, key.second, NPoly(c.coeff(0)));
    return r;
}

const OracleBundle& bundle4() {
    static const OracleBundle b = oracle_bundle(4);
    return b;
}

} // namespace

TEST_CASE("Euler characteristic of a single vertex") {
    RibbonDiagram d;
    d.kinds = {VertexKind::cross};
    d.pairing = {2, 3, 0, 1};
    CHECK(face_count(d) == 1);
    CHECK(euler_characteristic(d) == 0);
    CHECK(genus(d) == 1);
    d.pairing = {1, 0, 3, 2};
    CHECK(genus(d) == 0);
}

TEST_CASE("every generated shape is planar") {
    int count = 0;
    for (int legs : {0, 2, 4}) {
        for_each_planar_shape(legs, 4, [&](const RibbonDiagram& d) {
            ++count;
            CHECK(genus(d) == 0);
        });
    }
    CHECK(count > 0);
}

TEST_CASE("channel classification examples") {
    const auto one = single_crossing();
    REQUIRE(genus(one) == 0);
    auto c = channel_classify(one);
    CHECK_FALSE(c.h_reducible);
    CHECK_FALSE(c.v_reducible);
    CHECK_FALSE(c.two_particle_reducible);

    const auto two = horizontal_pair();
    REQUIRE(genus(two) == 0);
    c = channel_classify(two);
    CHECK(c.h_reducible);
    CHECK_FALSE(c.v_reducible);
    CHECK(c.two_particle_reducible);
    // Strands: legs 0-1 and 2-3 are joined, the type 2 pattern.
    const auto st = strands(two);
    CHECK(st.leg_partner[0] == 1);
    CHECK(st.leg_partner[3] == 2);

    RibbonDiagram g;
    g.legs = 2;
    g.kinds = {};
    g.pairing = {1, 0};
    CHECK_THROWS_AS(channel_classify(g), WrongLegCount);
}

TEST_CASE("smallest 2PI skeleton: five crossings, one loop, type 1") {
    // Among all-crossing 4-leg shapes, the first two-particle irreducible ones
    // beyond the single crossing appear at five vertices.
    int found5 = 0, below = 0;
    for_each_planar_shape(4, 5, [&](const RibbonDiagram& d) {
        if (d.vertices() < 2 || !is_skeleton(d)) return;
        const auto c = channel_classify(d);
        if (c.two_particle_reducible) return;
        if (d.vertices() < 5) {
            ++below;
            return;
        }
        const auto st = strands(d);
        CHECK(st.leg_partner[0] == 2);
        CHECK(st.closed_loops == 1);
        ++found5;
    });
    CHECK(below == 0);
    CHECK(found5 > 0);
}

TEST_CASE("enumerate_coefficient") {
    CHECK(enumerate_coefficient(Observable::gamma1, 1, 0) == NPoly(1L));
    CHECK(enumerate_coefficient(Observable::gamma1, 0, 1).is_zero());
    CHECK(enumerate_coefficient(Observable::G, 0, 0) == NPoly(1L));
    CHECK_THROWS_AS(enumerate_coefficient(Observable::G, 4, 2), OrderCapExceeded);
    CHECK_THROWS_AS(enumerate_coefficient(Observable::G, 7, 0, 7), OrderCapExceeded);
}

TEST_CASE("renormalized four-point functions start as g and g^2") {
    const auto& b = bundle4();
    CHECK(b.gamma1.coeff(1, 0) == NPoly(1L));
    CHECK(b.gamma2.coeff(2, 0) == NPoly(1L));
    CHECK(b.gamma2.coeff(0, 1) == NPoly(1L));
    CHECK(b.gamma2.coeff(1, 0).is_zero());
}

TEST_CASE("skeleton sums equal the renormalized bare series") {
    const auto& b = bundle4();
    const auto ren = renormalize(b.bare_G, {b.bare_gamma1, b.bare_gamma2});
    CHECK(ren.series[0] == b.gamma1);
    CHECK(ren.series[1] == b.gamma2);
    CHECK(ren.t.coeff(0, 0) == NPoly(1L));
}

TEST_CASE("channel identities through order 4") {
    const auto& b = bundle4();
    const NPoly n = NPoly::monomial(1);
    CHECK(series_geom(b.H2 + b.H1) == b.gamma2 + b.gamma1);
    CHECK(series_geom(b.H2 - b.H1) == b.gamma2 - b.gamma1);
    CHECK(series_geom(b.H2 + b.V2 * n + b.H1) == b.gamma2 * (n + NPoly(1L)) + b.gamma1);
    CHECK(b.D1 == b.H1 + b.V1 - b.gamma1);
    CHECK(b.D2 == b.H2 + b.V2 - b.gamma2);
    CHECK(b.H1 == b.V1);
}

TEST_CASE("n^0 relation Gamma_2 = V_2 / (1 - H_1 - H_2)^2") {
    const auto& b = bundle4();
    const auto one = BiSeries<NPoly>::constant(b.order, NPoly(1L));
    const auto h = n_zero_part(b.H1 + b.H2);
    const auto d = one - h;
    CHECK(n_zero_part(b.gamma2) == n_zero_part(b.V2) * series_inverse(d * d));
}

TEST_CASE("unflyped relations reproduce the oracle D'") {
    const auto& b = bundle4();
    const auto g1 = BiSeries<NPoly>::monomial(b.order, 1, 0);
    const auto g2 = BiSeries<NPoly>::monomial(b.order, 0, 1);
    const auto d = unflyped_to_dprime(b.gamma1, b.gamma2, g1, g2);
    CHECK(d.d1 == b.D1 - g1);
    CHECK(d.d2 == b.D2 - g2);
}

TEST_CASE("oracle coefficients are polynomials in n with nonnegative integer coefficients") {
    const auto& b = bundle4();
    for (const auto* s : {&b.gamma1, &b.gamma2, &b.H1, &b.H2, &b.V2}) {
        for (const auto& [key, c] : s->terms()) {
            for (const auto& [e, v] : c.terms()) {
                CHECK(v > 0);
                CHECK(v.get_den() == 1);
            }
        }
    }
}

TEST_CASE("thread count does not change the oracle output") {
    const auto a = oracle_bundle(4, 1);
    const auto b = oracle_bundle(4, 3);
    CHECK(a.bare_G == b.bare_G);
    CHECK(a.F == b.F);
    CHECK(a.gamma1 == b.gamma1);
    CHECK(a.D2 == b.D2);
}
