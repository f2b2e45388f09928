#include "support.hpp"

#include "tangles/io.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>

using namespace tangles;
using testing::close;

namespace {

const ThetaElem x = ThetaElem::v();
const ThetaElem s = ThetaElem::s();

ThetaElem xp(std::initializer_list<long> c) {
    XPoly p;
    int e = 0;
    for (long v : c) p = p + XPoly::monomial(e++, Rational(v));
    return ThetaElem(p);
}

const Real pi = boost::math::constants::pi<Real>();

} // namespace

TEST_CASE("rational canonical form and string round trip") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(5)) == "5/1");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-7") == make_rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("/3"), ParseError);
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational r(Integer(std::to_string(rng()) + std::to_string(rng())), Integer(std::to_string(rng() | 1)));
        if (i % 2) r = -r;
        r.canonicalize();
        CHECK(parse_rational(to_string(r)) == r);
        CHECK(rational_from_json(Json::parse(Json(rational_json(r)).dump())) == r);
    }
}

TEST_CASE("theta arithmetic eliminates s^2") {
    CHECK((x + s) * (x - s) == xp({-1, 0, 2}));
    CHECK(s * s == xp({1, 0, -1}));
    CHECK(cheb(3) == xp({0, -3, 0, 4}));
    CHECK(cheb(2) == xp({-1, 0, 2}));
}

TEST_CASE("theta derivative") {
    CHECK(theta_dtheta(x) == -s);
    CHECK(theta_dtheta(s) == x);
    CHECK(theta_dtheta(cheb(2)) == s * x * Rational(-4));
}

TEST_CASE("division by sin theta") {
    const ThetaElem q = xp({1, 2, 3});
    CHECK(theta_div_sin(ThetaElem(XPoly(), q.even())) == q);
    CHECK(theta_div_sin(xp({1, 0, -1})) == s);
    CHECK_THROWS_AS(theta_div_sin(ThetaElem(1L)), NotDivisible);
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto a = testing::random_theta(rng);
        CHECK(theta_div_sin(a * s) == a);
    }
}

TEST_CASE("theta evaluation") {
    CHECK(abs(theta_eval(x, pi / 2)) < Real("1e-40"));
    CHECK(close(theta_eval(cheb(3), pi / 3), Real(-1), Real("1e-40")));
    CHECK(close(theta_eval(s, pi / 6), Real(1) / 2, Real("1e-40")));
}

TEST_CASE("theta derivative matches central differences") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(0.1, 3.0);
    const Real h("1e-6");
    for (int i = 0; i < 10; ++i) {
        const auto a = testing::random_theta(rng);
        const Real t = angle(rng);
        const Real fd = (theta_eval(a, t + h) - theta_eval(a, t - h)) / (2 * h);
        CHECK(close(theta_eval(theta_dtheta(a), t), fd, Real("1e-6")));
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto a = testing::random_theta(rng), b = testing::random_theta(rng), c = testing::random_theta(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        const auto p = testing::random_npoly(rng, 3), q = testing::random_npoly(rng, 2), r = testing::random_npoly(rng, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("npoly and theta serialization round trip") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto p = testing::random_npoly(rng, 4);
        CHECK(npoly_from_json(Json::parse(npoly_json(p).dump())) == p);
        const auto t = testing::random_theta(rng, 4);
        CHECK(theta_from_json(Json::parse(theta_json(t).dump())) == t);
    }
    CHECK(theta_json(x + s * Rational(3)).dump() == R"({"even":["0/1","1/1"],"odd":["3/1"]})");
}

TEST_CASE("Fourier conversion") {
    const auto e = from_fourier({make_rational(6), make_rational(12), make_rational(4), make_rational(4)});
    CHECK(e == ThetaElem(6L) + x * Rational(12) + cheb(2) * Rational(4) + cheb(3) * Rational(4));
    const auto back = to_cos_fourier(e);
    REQUIRE(back.size() >= 4);
    CHECK(back[3] == 4);
}
