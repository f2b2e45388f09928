#pragma once

#include "tangles/series.hpp"
#include "tangles/trig_elem.hpp"

#include <random>

namespace testing {

using namespace tangles;

inline Rational random_rational(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return make_rational(num(rng), den(rng));
}

inline XPoly random_xpoly(std::mt19937& rng, int degree) {
    XPoly p;
    for (int e = 0; e <= degree; ++e) p = p + XPoly::monomial(e, random_rational(rng));
    return p;
}

inline NPoly random_npoly(std::mt19937& rng, int degree) {
    NPoly p;
    for (int e = 0; e <= degree; ++e) p = p + NPoly::monomial(e, random_rational(rng));
    return p;
}

inline ThetaElem random_theta(std::mt19937& rng, int degree = 3) {
    return ThetaElem(random_xpoly(rng, degree), random_xpoly(rng, degree));
}

template <class R, class Gen>
TruncSeries<R> random_series(Gen&& gen, int order, int valuation = 0) {
    TruncSeries<R> s(Var::g, order);
    for (int k = valuation; k <= order; ++k) s.coeff(k) = gen();
    return s;
}

inline bool close(const Real& a, const Real& b, const Real& rel) { return abs(a - b) <= rel * std::max(Real(1), abs(b)); }

} // namespace testing
