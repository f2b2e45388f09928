#include "support.hpp"

#include "tangles/implicit_solve.hpp"
#include "tangles/io.hpp"

#include "doctest.h"

using namespace tangles;

namespace {

TruncSeries<Rational> ser(int order, std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return TruncSeries<Rational>(Var::g, order, v);
}

TruncSeries<Rational> g_(int order) { return TruncSeries<Rational>::variable(Var::g, order); }

} // namespace

TEST_CASE("geometric series and its inverse") {
    CHECK(series_geom(g_(5)) == ser(5, {0, 1, 1, 1, 1, 1}));
    CHECK(series_geom(TruncSeries<Rational>(Var::g, 5)).is_zero_series());
    CHECK(series_igeom(g_(5)) == ser(5, {0, 1, -1, 1, -1, 1}));
    CHECK(series_igeom(ser(5, {0, 1, 1})) == ser(5, {0, 1, 0, -1, 1, 0}));
    CHECK_THROWS_AS(series_geom(ser(3, {1, 1})), NonzeroConstantTerm);
    CHECK_THROWS_AS(series_igeom(ser(3, {1})), NonzeroConstantTerm);
}

TEST_CASE("geom and igeom are mutual inverses") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto h = testing::random_series<Rational>([&] { return testing::random_rational(rng); }, 8, 1);
        CHECK(series_igeom(series_geom(h)) == h);
        const auto p = testing::random_series<NPoly>([&] { return testing::random_npoly(rng, 2); }, 6, 1);
        CHECK(series_geom(series_igeom(p)) == p);
    }
}

TEST_CASE("composition") {
    CHECK(series_compose(series_geom(g_(6)), g_(6) * Rational(2)) == ser(6, {0, 2, 4, 8, 16, 32, 64}));
    // cos(g^2) = 1 - g^4/2 + g^8/24
    const auto [sn, cs] = series_sin_cos(g_(9) * g_(9));
    CHECK(cs[4] == make_rational(-1, 2));
    CHECK(cs[8] == make_rational(1, 24));
    CHECK(cs[2] == 0);
    CHECK_THROWS_AS(series_compose(series_geom(g_(4)), ser(4, {1, 1})), NonzeroConstantTerm);
}

TEST_CASE("reversion") {
    CHECK(series_revert(g_(5)) == g_(5));
    CHECK(series_revert(ser(5, {0, 1, 1})) == ser(5, {0, 1, -1, 2, -5, 14}));
    CHECK(series_revert(g_(4) * Rational(2)) == g_(4) * make_rational(1, 2));
    CHECK_THROWS_AS(series_revert(ser(4, {0, 0, 1})), NonUnitLeadingCoefficient);
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        auto f = testing::random_series<Rational>([&] { return testing::random_rational(rng); }, 7, 1);
        if (f[1] == 0) f.coeff(1) = 1;
        CHECK(series_compose(series_revert(f), f) == g_(7));
    }
}

TEST_CASE("truncation order is enforced") {
    const auto a = ser(3, {1, 2, 3, 4});
    CHECK_THROWS_AS(a[4], TruncationError);
    CHECK_THROWS_AS(a.truncated(5), TruncationError);
    CHECK((a * g_(6)).order() == 4);
    CHECK((a + g_(6)).order() == 3);
    CHECK_THROWS_AS(a + TruncSeries<Rational>::variable(Var::tau, 3), VariableMismatch);
}

TEST_CASE("implicit solve: single unknown") {
    // y - g(1 + y) = 0
    ImplicitSystem<Rational> sys;
    sys.unknown_start = {1};
    sys.residual_start = {1};
    sys.target = {8};
    sys.residuals = [](const std::vector<TruncSeries<Rational>>& u) {
        const auto& y = u[0];
        const auto one = TruncSeries<Rational>::constant(Var::g, y.order(), Rational(1));
        return std::vector<TruncSeries<Rational>>{y - g_(y.order()) * (one + y)};
    };
    CHECK(implicit_solve(sys)[0] == ser(8, {0, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("implicit solve: triangular pair") {
    // y1 = g + y2^2, y2 = g y1
    ImplicitSystem<Rational> sys;
    sys.unknown_start = {1, 2};
    sys.residual_start = {1, 2};
    sys.target = {8, 8};
    sys.residuals = [](const std::vector<TruncSeries<Rational>>& u) {
        const auto g = g_(u[0].order());
        return std::vector<TruncSeries<Rational>>{u[0] - g - u[1] * u[1], u[1] - g * u[0]};
    };
    const auto sol = implicit_solve(sys);
    // Independent check by substitution.
    const auto g = g_(8);
    CHECK((sol[0] - g - sol[1] * sol[1]).is_zero_series());
    CHECK((sol[1] - g * sol[0]).is_zero_series());
    CHECK(sol[0][1] == 1);
    CHECK(sol[0][4] == 1);
    CHECK(sol[1][2] == 1);
    CHECK(sol[1][5] == 1);
}

TEST_CASE("implicit solve reports a singular linearization with its order") {
    ImplicitSystem<Rational> sys;
    sys.unknown_start = {1};
    sys.residual_start = {1};
    sys.target = {4};
    // The unknown never enters the residual.
    sys.residuals = [](const std::vector<TruncSeries<Rational>>& u) {
        return std::vector<TruncSeries<Rational>>{g_(u[0].order())};
    };
    try {
        implicit_solve(sys);
        FAIL("expected SingularLinearization");
    } catch (const SingularLinearization& e) {
        CHECK(e.order == 0);
    }
}

TEST_CASE("series serialization round trip") {
    std::mt19937 rng(23);
    const auto a = testing::random_series<Rational>([&] { return testing::random_rational(rng); }, 6);
    CHECK(series_from_json<Rational>(Json::parse(series_json(a).dump())) == a);
    const auto t = testing::random_series<ThetaElem>([&] { return testing::random_theta(rng); }, 4);
    CHECK(series_from_json<ThetaElem>(Json::parse(series_json(t).dump())) == t);
    const auto j = series_json(ser(2, {1, 0, -3}));
    CHECK(j.dump() == R"({"var":"g","order":2,"coeffs":["1/1","0/1","-3/1"]})");
    CHECK_THROWS_AS(series_from_json<Rational>(Json::parse(R"({"var":"g","order":3,"coeffs":["1/1"]})")), ParseError);
}
